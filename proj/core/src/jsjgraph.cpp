#include "hkannuli/jsjgraph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hka {

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::IFibered: return "ifibered";
        case NodeKind::Seifert: return "seifert";
        case NodeKind::Simple: return "simple";
    }
    return "?";
}

SlopePair SlopePair::recip(std::int64_t p, std::int64_t q) {
    if (p == 0 || q == 0) throw std::invalid_argument("recip slope pair needs p*q != 0");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("recip slope pair needs gcd(p, q) = 1");
    std::int64_t s = ((p < 0) != (q < 0)) ? -1 : 1;
    std::int64_t a = detail::abs_checked(p), b = detail::abs_checked(q);
    if (a > b) std::swap(a, b);
    return {Form::Recip, s * a, b};
}

SlopePair SlopePair::prod(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("prod slope pair needs q > 0");
    if (p == 1 || p == -1) throw std::invalid_argument("prod slope pair needs p != +-1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("prod slope pair needs gcd(p, q) = 1");
    return {Form::Prod, p, q};
}

std::string to_string(const SlopePair& s) {
    return std::string(s.form() == SlopePair::Form::Prod ? "prod:" : "recip:") + std::to_string(s.p()) + "/" +
           std::to_string(s.q());
}

namespace {

std::int64_t parse_i64(std::string_view s, const std::string& what) {
    std::int64_t v = 0;
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad integer in " + what + ": \"" + std::string(s) + "\"");
    return v;
}

}  // namespace

SlopePair parse_slope(std::string_view s) {
    auto colon = s.find(':');
    auto slash = s.find('/');
    if (colon == std::string_view::npos || slash == std::string_view::npos || slash < colon)
        throw std::invalid_argument("slope must be prod:p/q or recip:p/q");
    std::string_view form = s.substr(0, colon);
    std::int64_t p = parse_i64(s.substr(colon + 1, slash - colon - 1), "slope");
    std::int64_t q = parse_i64(s.substr(slash + 1), "slope");
    if (form == "prod") return SlopePair::prod(p, q);
    if (form == "recip") return SlopePair::recip(p, q);
    throw std::invalid_argument("unknown slope form \"" + std::string(form) + "\"");
}

JsjGraph JsjGraph::trivial() { return {{{"x", NodeKind::Simple}}, {}}; }

JsjGraph JsjGraph::graph_k() {
    return {{{"x", NodeKind::IFibered}, {"s", NodeKind::Seifert}}, {{"e1", "x", "s", std::nullopt, std::nullopt}}};
}

JsjGraph JsjGraph::graph_m() {
    return {{{"x", NodeKind::IFibered}, {"s1", NodeKind::Seifert}, {"s2", NodeKind::Seifert}},
            {{"e1", "x", "s1", std::nullopt, std::nullopt}, {"e2", "x", "s2", std::nullopt, std::nullopt}}};
}

namespace {

const char* kStructureLemma = "JSJ-graph structure";

struct Shape {
    std::string center;
    // Parallel classes among non-loop edges, keyed by unordered endpoints.
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> classes;
    std::size_t class_size(const JsjEdge& e) const {
        if (e.is_loop()) return 0;
        auto k = std::minmax(e.a, e.b);
        return classes.at({k.first, k.second}).size();
    }
    bool has_class_of(std::size_t n) const {
        return std::any_of(classes.begin(), classes.end(), [&](const auto& c) { return c.second.size() == n; });
    }
};

Shape shape_of(const JsjGraph& g) {
    Shape s;
    for (const auto& n : g.nodes)
        if (n.kind != NodeKind::Seifert) s.center = n.id;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.is_loop()) continue;
        auto k = std::minmax(e.a, e.b);
        s.classes[{k.first, k.second}].push_back(i);
    }
    return s;
}

bool bigon_plus_edge(const JsjGraph& g, const Shape& s) { return g.edges.size() == 3 && s.has_class_of(2); }

bool has_label(const JsjGraph& g, AnnulusType t) {
    return std::any_of(g.edges.begin(), g.edges.end(), [&](const JsjEdge& e) { return e.label == t; });
}

}  // namespace

std::vector<Violation> validate_structure(const JsjGraph& g) {
    std::vector<Violation> out;
    std::map<std::string, NodeKind> kinds;
    for (const auto& n : g.nodes)
        if (!kinds.emplace(n.id, n.kind).second) out.push_back({"duplicate-node", kStructureLemma, n.id});
    std::set<std::string> eids;
    for (const auto& e : g.edges) {
        if (!eids.insert(e.id).second) out.push_back({"duplicate-edge", kStructureLemma, e.id});
        for (const auto& end : {e.a, e.b})
            if (!kinds.count(end)) out.push_back({"unknown-node", kStructureLemma, e.id + ":" + end});
    }
    std::vector<std::string> centers;
    for (const auto& n : g.nodes)
        if (n.kind != NodeKind::Seifert) centers.push_back(n.id);
    if (centers.size() != 1) out.push_back({"central-node", kStructureLemma, std::to_string(centers.size()) + " non-Seifert nodes"});
    if (g.edges.size() > 3) out.push_back({"edge-count", kStructureLemma, std::to_string(g.edges.size()) + " edges"});
    if (centers.size() == 1) {
        for (const auto& e : g.edges)
            if (e.a != centers[0] && e.b != centers[0]) out.push_back({"edge-incidence", kStructureLemma, e.id});
    }
    for (const auto& n : g.nodes) {
        if (n.kind != NodeKind::Seifert) continue;
        std::size_t deg = 0;
        for (const auto& e : g.edges) deg += (e.a == n.id) + (e.b == n.id);
        if (deg > 3)
            out.push_back({"seifert-degree", kStructureLemma, n.id + " has degree " + std::to_string(deg)});
    }
    return out;
}

std::vector<Violation> slope_rules(AnnulusType label, const SlopePair& slope) {
    std::vector<Violation> out;
    if (label != AnnulusType::T3_3i && label != AnnulusType::T3_3ii)
        out.push_back({rules::kSlopeLabel, "slope pair definition", to_string(label) + " with " + to_string(slope)});
    if (label == AnnulusType::T3_3ii && !slope.is_trivial())
        out.push_back({rules::kType33iiSlope, "type 3-3ii slope lemma", to_string(slope)});
    return out;
}

std::vector<Violation> bigon_slope_rules(const SlopePair& a, const SlopePair& b) {
    std::vector<Violation> out;
    bool ok = a == b && a.form() == SlopePair::Form::Prod && detail::abs_checked(a.p()) > 1;
    if (!ok) out.push_back({rules::kBigonSlopes, "bigon slope lemma", to_string(a) + " vs " + to_string(b)});
    return out;
}

std::vector<Violation> validate_labels(const JsjGraph& g, const RuleSet& rs) {
    if (!validate_structure(g).empty()) throw std::invalid_argument("validate_labels: graph structure is invalid");
    std::vector<Violation> out;
    const Shape s = shape_of(g);
    auto emit = [&](const char* rule, const char* lemma, const std::string& subject) {
        if (rs.enabled(rule)) out.push_back({rule, lemma, subject});
    };
    const bool bpe = bigon_plus_edge(g, s);
    const bool has22 = has_label(g, AnnulusType::T2_2);
    std::size_t t21_seen = 0;

    for (const auto& e : g.edges) {
        if (!e.label) {
            if (e.slope) emit(rules::kSlopeLabel, "slope pair definition", e.id);
            continue;
        }
        const AnnulusType t = *e.label;
        const std::size_t cls = s.class_size(e);

        if (t == AnnulusType::T1 || t == AnnulusType::T3_1 || t == AnnulusType::T4_2)
            emit(rules::kAtoroidal, "atoroidal type restriction", e.id);
        if (t == AnnulusType::T4_1) emit(rules::kType41, "type 4-1 classification theorem", e.id);
        if (t == AnnulusType::T2_1) {
            if (cls >= 2) emit(rules::kType21Shape, "type 2-1 annulus lemma", e.id);
            if (++t21_seen > 1) emit(rules::kType21Shape, "type 2-1 annulus lemma", e.id);
        }
        if (t == AnnulusType::T2_2 && bpe) emit(rules::kType22Shape, "type 2-2 annulus lemma", e.id);
        if (t == AnnulusType::T3_3ii && (cls < 2 || cls != g.edges.size()))
            emit(rules::kType33iiShape, "type 3-3ii annulus lemma", e.id);
        if (cls >= 2 && t != AnnulusType::T2_2 && t != AnnulusType::T3_3i && t != AnnulusType::T3_3ii)
            emit(rules::kParallelLabels, "bigon edge lemma", e.id);
        if (bpe && cls == 2 && t != AnnulusType::T3_3i) emit(rules::kBigonPlusEdge, "bigon-plus-edge classification", e.id);
        if (bpe && cls != 2 && t != AnnulusType::T3_2i) emit(rules::kBigonPlusEdge, "bigon-plus-edge classification", e.id);
        if (e.is_loop() && (t == AnnulusType::T2_1 || t == AnnulusType::T3_3ii))
            emit(rules::kLoopLabels, "loop edge lemma", e.id);

        if (e.slope) {
            for (auto& v : slope_rules(t, *e.slope))
                if (rs.enabled(v.rule)) out.push_back({v.rule, v.lemma, e.id + ": " + v.subject});
            if (t == AnnulusType::T3_3i && e.slope->is_trivial() && has22)
                emit(rules::kTrivialSlopeType22, "trivial slope lemma", e.id);
        }
    }

    // Fully labeled theta graph.
    if (s.has_class_of(3) && g.edges.size() == 3 &&
        std::all_of(g.edges.begin(), g.edges.end(), [](const JsjEdge& e) { return e.label.has_value(); }) && !has22)
        emit(rules::kThetaType22, "theta-graph lemma", "graph");

    // Bigon of two T3_3i edges with slopes.
    for (const auto& [key, idx] : s.classes) {
        if (idx.size() != 2) continue;
        const auto& a = g.edges[idx[0]];
        const auto& b = g.edges[idx[1]];
        if (a.label == AnnulusType::T3_3i && b.label == AnnulusType::T3_3i && a.slope && b.slope)
            for (auto& v : bigon_slope_rules(*a.slope, *b.slope))
                if (rs.enabled(v.rule)) out.push_back({v.rule, v.lemma, a.id + "," + b.id + ": " + v.subject});
    }
    return out;
}

std::vector<std::string> graph_warnings(const JsjGraph& g) {
    std::vector<std::string> w;
    if (!validate_structure(g).empty()) return w;
    const Shape s = shape_of(g);
    const bool three_single = g.edges.size() == 3 && !s.has_class_of(2) && !s.has_class_of(3);
    if (three_single || bigon_plus_edge(g, s)) w.push_back("admissible, realizability unknown");
    return w;
}

JsjGraph parse_jsj_graph(std::istream& in) {
    JsjGraph g;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok[0] == "node") {
            if (tok.size() != 3) fail("expected: node <id> ifibered|seifert|simple");
            NodeKind k;
            if (tok[2] == "ifibered") k = NodeKind::IFibered;
            else if (tok[2] == "seifert") k = NodeKind::Seifert;
            else if (tok[2] == "simple") k = NodeKind::Simple;
            else fail("unknown node kind \"" + tok[2] + "\"");
            g.nodes.push_back({tok[1], k});
        } else if (tok[0] == "edge") {
            if (tok.size() < 4 || tok.size() > 6) fail("expected: edge <id> <a> <b> [label=..] [slope=..]");
            JsjEdge e{tok[1], tok[2], tok[3], std::nullopt, std::nullopt};
            for (std::size_t i = 4; i < tok.size(); ++i) {
                const std::string& t = tok[i];
                if (t.rfind("label=", 0) == 0) {
                    auto lt = parse_annulus_type(t.substr(6));
                    if (!lt) fail("unknown annulus type \"" + t.substr(6) + "\"");
                    e.label = lt;
                } else if (t.rfind("slope=", 0) == 0) {
                    try {
                        e.slope = parse_slope(t.substr(6));
                    } catch (const std::invalid_argument& ex) {
                        fail(ex.what());
                    }
                } else {
                    fail("unknown edge attribute \"" + t + "\"");
                }
            }
            g.edges.push_back(std::move(e));
        } else {
            fail("unknown directive \"" + tok[0] + "\"");
        }
    }
    return g;
}

}  // namespace hka
