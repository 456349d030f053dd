#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hkannuli/arcs.hpp"
#include "hkannuli/bigint.hpp"
#include "hkannuli/boundary.hpp"
#include "hkannuli/classify.hpp"
#include "hkannuli/freegroup.hpp"
#include "hkannuli/jsjgraph.hpp"
#include "hkannuli/tangle.hpp"

namespace hka::cli {

namespace {

using json = nlohmann::ordered_json;

// Malformed input text: exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that fails a check: exit 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg, json detail = json::object())
        : std::runtime_error(msg), detail(std::move(detail)) {}
    json detail;
};

BigInt big(const std::string& flag, const std::string& text) {
    try {
        return parse_bigint(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": expected an integer, got \"" + text + "\"");
    }
}

std::int64_t narrow(const std::string& flag, const std::string& text) {
    auto v = to_int64(big(flag, text));
    if (!v) throw ValidationError(flag + "=" + text + " is out of supported range");
    return *v;
}

Word word_arg(const std::string& text) {
    try {
        return parse_word(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::overflow_error&) {
        throw ValidationError("word \"" + text + "\" is out of supported range");
    }
}

std::string set_text(const std::set<std::int64_t>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ", ") + std::to_string(*it);
    return out + "}";
}

template <class T>
std::string join(const std::vector<T>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    std::ostringstream text;
    int code = kOk;
};

struct KArgs {
    std::string p, q, delta, rho, beta, lambda, mu;
};

void add_k_options(CLI::App* sub, KArgs& k) {
    sub->add_option("--p", k.p, "slope numerator p")->required();
    sub->add_option("--q", k.q, "slope denominator q > 0")->required();
    sub->add_option("--delta", k.delta, "intersection number delta")->required();
    sub->add_option("--rho", k.rho, "arc slope numerator rho >= 0")->required();
    sub->add_option("--beta", k.beta, "arc slope parameter beta")->required();
    sub->add_option("--lambda", k.lambda, "merged twist lambda")->required();
    sub->add_option("--mu", k.mu, "merged twist mu")->required();
}

TypeKParams k_params(const KArgs& a) {
    return {narrow("--p", a.p),         narrow("--q", a.q),           narrow("--delta", a.delta),
            narrow("--rho", a.rho),     narrow("--beta", a.beta),     narrow("--lambda", a.lambda),
            narrow("--mu", a.mu)};
}

json params_json(const TypeKParams& k) {
    return {{"p", k.p},       {"q", k.q},       {"delta", k.delta}, {"rho", k.rho},
            {"beta", k.beta}, {"lambda", k.lambda}, {"mu", k.mu}};
}

TypeKParams checked_k(const TypeKParams& k, Report& r) {
    for (auto& w : param_warnings(k)) r.warnings.push_back(w);
    try {
        return validate_params(k);
    } catch (const InvalidParams& e) {
        json names = json::array();
        for (const auto& v : e.violations()) names.push_back({{"name", v.name}, {"detail", v.detail}});
        throw ValidationError(e.what(), {{"violations", names}});
    }
}

json outcome_json(const ClassificationOutcome& o) {
    json ev = {{"criterion", o.criterion}};
    if (o.witness) {
        ev["root"] = to_string(*o.witness);
        ev["power"] = o.power;
    }
    return ev;
}

std::string outcome_text(const ClassificationOutcome& o) {
    std::string s = to_string(o.verdict) + " " + o.criterion;
    if (o.witness) s += " root=" + to_string(*o.witness) + " power=" + std::to_string(o.power);
    if (o.verdict == Verdict::Inconclusive) s += " (requires geometric input)";
    return s;
}

void census_into(const CensusReport& c, Report& r) {
    r.result["params"] = params_json(c.params);
    r.result["window"] = c.window;
    json per = json::array();
    r.text << "window: " << set_text(c.window) << "\n";
    for (const auto& e : c.per_n) {
        std::string w = to_string(boundary_word(c.params, e.n));
        per.push_back({{"n", e.n}, {"word", w}, {"verdict", to_string(e.outcome.verdict)},
                       {"evidence", outcome_json(e.outcome)}});
        r.text << "n=" << e.n << " [" << w << "] " << outcome_text(e.outcome) << "\n";
    }
    r.result["per_n"] = per;
    r.result["totals"] = {{"certified", c.certified},
                          {"inconclusive", c.inconclusive},
                          {"non_separating", c.non_separating},
                          {"total_non_certified", c.total_non_certified}};
    r.text << "certified: " << c.certified << "\ninconclusive: " << c.inconclusive
           << "\nnon-separating: " << c.non_separating << "\ntotal non-certified: " << c.total_non_certified
           << "\n";
}

std::string synopsis(const CLI::App* app) {
    std::string s = app->get_name();
    for (const CLI::App* p = app->get_parent(); p; p = p->get_parent()) s = p->get_name() + " " + s;
    return "usage: " + s + "\n" + app->help("", CLI::AppFormatMode::Sub);
}

const CLI::App* deepest(const CLI::App* app) {
    for (const CLI::App* sub : app->get_subcommands())
        if (sub->parsed()) return deepest(sub);
    return app;
}

// "tangle eval -- a1 ... an --convention X": pull --convention (and
// --json) out of the positional tail so CLI11 sees them as options.
std::vector<std::string> hoist_tangle_flags(std::vector<std::string> args) {
    auto dd = std::find(args.begin(), args.end(), "--");
    if (dd == args.end()) return args;
    std::vector<std::string> head(args.begin(), dd), tail(dd + 1, args.end()), rest;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (tail[i] == "--convention" && i + 1 < tail.size()) {
            head.push_back(tail[i]);
            head.push_back(tail[++i]);
        } else if (tail[i].rfind("--convention=", 0) == 0 || tail[i] == "--json") {
            head.push_back(tail[i]);
        } else {
            rest.push_back(tail[i]);
        }
    }
    head.push_back("--");
    head.insert(head.end(), rest.begin(), rest.end());
    return head;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Essential annuli of genus two handlebody-knot exteriors: words, tangles, classifiers",
                 "hkann"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON report");
    auto json_flag = [&](CLI::App* s) { s->add_flag("--json", as_json, "emit a JSON report"); };

    // tangle eval
    auto* tangle = app.add_subcommand("tangle", "rational tangle arithmetic")->require_subcommand(1);
    auto* t_eval = tangle->add_subcommand("eval", "evaluate [a1, ..., an]");
    std::vector<std::string> twists;
    std::string convention = "literal";
    t_eval->add_option("twists", twists, "twist counts a1 ... an (after --)")->required();
    t_eval->add_option("--convention", convention, "literal|mirrored")
        ->check(CLI::IsMember({"literal", "mirrored"}));
    json_flag(t_eval);

    // arcs crossings
    auto* arcs = app.add_subcommand("arcs", "reference arc crossings")->require_subcommand(1);
    auto* a_cross = arcs->add_subcommand("crossings", "signed crossing sequences of a reference arc");
    std::string a_rho, a_beta;
    a_cross->add_option("--rho", a_rho, "rho >= 0")->required();
    a_cross->add_option("--beta", a_beta, "beta")->required();
    json_flag(a_cross);

    // boundary word
    auto* boundary = app.add_subcommand("boundary", "boundary words of type-K families")->require_subcommand(1);
    auto* b_word = boundary->add_subcommand("word", "word of the boundary curve for one n");
    KArgs bk;
    std::string b_n;
    add_k_options(b_word, bk);
    b_word->add_option("--n", b_n, "family index n")->required();
    json_flag(b_word);

    // classify
    auto* classify = app.add_subcommand("classify", "annulus classifiers")->require_subcommand(1);
    auto* c_k = classify->add_subcommand("type-k", "type 4-1 census of a type-K family");
    KArgs ck;
    std::string c_range = "10";
    add_k_options(c_k, ck);
    c_k->add_option("--range", c_range, "scan n in [-N, N]");
    json_flag(c_k);

    auto* c_m = classify->add_subcommand("type-m", "type-M annulus type from p");
    std::string m_p;
    c_m->add_option("--p", m_p, "integer p")->required();
    json_flag(c_m);

    auto* c_s = classify->add_subcommand("type-s", "type-S annulus types from (p, q)");
    std::string s_p, s_q, s_cv;
    c_s->add_option("--p", s_p, "p, not 0 or +-1")->required();
    c_s->add_option("--q", s_q, "q > 0")->required();
    c_s->add_option("--cv-trivial", s_cv, "true|false, needed when q = 1")->check(CLI::IsMember({"true", "false"}));
    json_flag(c_s);

    auto* c_em = classify->add_subcommand("em", "JSJ-graph of an induced handlebody-knot");
    std::string e_l, e_m, e_n, e_p, e_side;
    c_em->add_option("--l", e_l, "l")->required();
    c_em->add_option("--m", e_m, "m")->required();
    c_em->add_option("--n", e_n, "n")->required();
    c_em->add_option("--p", e_p, "p")->required();
    c_em->add_option("--side", e_side, "plus|minus")->required()->check(CLI::IsMember({"plus", "minus"}));
    json_flag(c_em);

    // word
    auto* word = app.add_subcommand("word", "free group word tests")->require_subcommand(1);
    auto* w_prim = word->add_subcommand("primitive", "is the word primitive");
    auto* w_pow = word->add_subcommand("power", "is the word a power of a primitive");
    auto* w_conj = word->add_subcommand("conjugate", "are two words conjugate");
    std::string w1, w2;
    w_prim->add_option("word", w1, "word, e.g. \"v u^2\"")->required();
    w_pow->add_option("word", w1, "word, e.g. \"v u^2\"")->required();
    w_conj->add_option("a", w1, "first word")->required();
    w_conj->add_option("b", w2, "second word")->required();
    json_flag(w_prim);
    json_flag(w_pow);
    json_flag(w_conj);

    // jsj validate
    auto* jsj = app.add_subcommand("jsj", "relative JSJ-graph checks")->require_subcommand(1);
    auto* j_val = jsj->add_subcommand("validate", "validate a labeled graph file");
    std::string j_file;
    j_val->add_option("file", j_file, "graph file")->required();
    json_flag(j_val);

    // example five-two
    auto* example = app.add_subcommand("example", "worked examples")->require_subcommand(1);
    auto* x_52 = example->add_subcommand("five-two", "the 5_2 handlebody-knot family");
    std::string x_range = "5";
    x_52->add_option("--range", x_range, "scan n in [-N, N]");
    json_flag(x_52);

    std::vector<std::string> args = raw_args;
    if (args.size() >= 2 && args[0] == "tangle" && args[1] == "eval") args = hoist_tangle_flags(args);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << synopsis(deepest(&app));
        return kOk;
    } catch (const CLI::ParseError& e) {
        const CLI::App* leaf = deepest(&app);
        // Name an unknown flag even when a missing required option is what
        // CLI11 reports first.
        for (const auto& a : args) {
            if (a == "--") break;
            if (a.rfind("--", 0) != 0) continue;
            std::string name = a.substr(0, a.find('='));
            if (!leaf->get_option_no_throw(name) && !app.get_option_no_throw(name)) {
                err << "error: unknown flag " << name << "\n" << synopsis(leaf);
                return kUsage;
            }
        }
        err << "error: " << e.what() << "\n" << synopsis(leaf);
        return kUsage;
    }

    Report r;
    const CLI::App* leaf = deepest(&app);
    r.command = leaf->get_parent()->get_name() + " " + leaf->get_name();
    try {
        if (t_eval->parsed()) {
            std::vector<BigInt> a;
            json in = json::array();
            for (const auto& t : twists) {
                a.push_back(big("twist", t));
                in.push_back(t);
            }
            r.inputs = {{"twists", in}, {"convention", convention}};
            ExtendedRational f = cf_eval(RationalTangle(a), convention == "mirrored" ? TwistConvention::Mirrored
                                                                                      : TwistConvention::Literal);
            r.result = {{"value", to_string(f)},
                        {"numerator", f.num.str()},
                        {"denominator", f.den.str()},
                        {"integral", is_integral(f)}};
            r.text << to_string(f) << "\n";
        } else if (a_cross->parsed()) {
            std::int64_t rho = narrow("--rho", a_rho), beta = narrow("--beta", a_beta);
            r.inputs = {{"rho", rho}, {"beta", beta}};
            if (!slope_is_valid(rho, beta))
                throw ValidationError("invalid slope: need rho >= 0 and gcd(2rho, |2beta+1|) = 1");
            ReferenceCrossings rc = reference_crossings(rho, beta);
            std::vector<std::int64_t> kap(rc.ext.kappa.begin(), rc.ext.kappa.end());
            r.result = {{"A", rc.seq.entries}, {"A_hat", rc.ext.entries}, {"kappa", kap}, {"zeta", rc.ext.zeta()}};
            r.text << "A: " << join(rc.seq.entries) << "\nA_hat: " << join(rc.ext.entries)
                   << "\nkappa: " << join(kap) << "\nzeta: " << join(rc.ext.zeta()) << "\n";
        } else if (b_word->parsed()) {
            TypeKParams k = k_params(bk);
            std::int64_t n = narrow("--n", b_n);
            r.inputs = params_json(k);
            r.inputs["n"] = n;
            checked_k(k, r);
            std::string w = to_string(boundary_word(k, n));
            r.result = {{"word", w}};
            r.text << w << "\n";
        } else if (c_k->parsed()) {
            TypeKParams k = k_params(ck);
            std::int64_t N = narrow("--range", c_range);
            r.inputs = params_json(k);
            r.inputs["range"] = N;
            if (N <= 0) throw ValidationError("--range must be positive");
            checked_k(k, r);
            census_into(typeK_census(k, N), r);
        } else if (c_m->parsed()) {
            BigInt p = big("--p", m_p);
            r.inputs = {{"p", m_p}};
            AnnulusType t = classify_typeM(p);
            r.result = {{"type", to_string(t)}};
            r.text << to_string(t) << "\n";
        } else if (c_s->parsed()) {
            BigInt p = big("--p", s_p), q = big("--q", s_q);
            std::optional<bool> cv;
            if (!s_cv.empty()) cv = s_cv == "true";
            r.inputs = {{"p", s_p}, {"q", s_q}, {"cv_trivial", cv ? json(*cv) : json(nullptr)}};
            std::pair<AnnulusType, AnnulusType> ts;
            try {
                ts = classify_typeS(p, q, cv);
            } catch (const std::invalid_argument& e) {
                throw ValidationError(e.what());
            }
            r.result = {{"v_side", to_string(ts.first)}, {"v_prime_side", to_string(ts.second)}};
            r.text << to_string(ts.first) << " " << to_string(ts.second) << "\n";
        } else if (c_em->parsed()) {
            EmParams e{big("--l", e_l), big("--m", e_m), big("--n", e_n), big("--p", e_p)};
            r.inputs = {{"l", e_l}, {"m", e_m}, {"n", e_n}, {"p", e_p}, {"side", e_side}};
            EmInvariants inv = em_invariants(e);
            EmGraphResult g = em_jsj_graph(e, e_side == "plus" ? EmSide::Plus : EmSide::Minus);
            r.warnings = g.warnings;
            r.result = {{"graph", to_string(g.shape)}, {"o_alpha", inv.o_alpha.str()}, {"o_beta", inv.o_beta.str()}};
            r.text << to_string(g.shape) << "\n";
        } else if (w_prim->parsed()) {
            Word w = word_arg(w1);
            r.inputs = {{"word", to_string(w)}};
            bool b = is_primitive(w);
            r.result = {{"primitive", b}};
            r.text << (b ? "true" : "false") << "\n";
        } else if (w_pow->parsed()) {
            Word w = word_arg(w1);
            r.inputs = {{"word", to_string(w)}};
            if (w.is_identity()) throw ValidationError("the identity has no root");
            Root rt = root(w);
            bool b = is_primitive(rt.r);
            r.result = {{"power_of_primitive", b}, {"root", to_string(rt.r)}, {"power", rt.k},
                        {"cho_koda", cho_koda_criterion(w)}};
            r.text << (b ? "true" : "false") << "\nroot: " << to_string(rt.r) << "\npower: " << rt.k << "\n";
        } else if (w_conj->parsed()) {
            Word a = word_arg(w1), b = word_arg(w2);
            r.inputs = {{"a", to_string(a)}, {"b", to_string(b)}};
            bool c = are_conjugate(a, b);
            r.result = {{"conjugate", c}};
            r.text << (c ? "true" : "false") << "\n";
        } else if (j_val->parsed()) {
            r.inputs = {{"file", j_file}};
            std::ifstream in(j_file);
            if (!in) throw UsageError("cannot open graph file \"" + j_file + "\"");
            JsjGraph g;
            try {
                g = parse_jsj_graph(in);
            } catch (const std::invalid_argument& e) {
                throw UsageError(j_file + ": " + e.what());
            }
            std::vector<Violation> vs = validate_structure(g);
            if (vs.empty()) vs = validate_labels(g);
            r.warnings = graph_warnings(g);
            json arr = json::array();
            for (const auto& v : vs) {
                arr.push_back({{"rule", v.rule}, {"lemma", v.lemma}, {"subject", v.subject}});
                r.text << "violation " << v.rule << " [" << v.lemma << "] " << v.subject << "\n";
            }
            r.result = {{"violations", arr}};
            if (vs.empty()) r.text << "ok\n";
            else r.code = kValidation;
        } else if (x_52->parsed()) {
            std::int64_t N = narrow("--range", x_range);
            r.inputs = {{"range", N}};
            if (N < 2) throw ValidationError("--range must be at least 2");
            TypeKParams k = five_two_params();
            r.text << "5_2 family: boundary word v^n u^(n+1)\n";
            census_into(typeK_census(k, N), r);
            json known = json::array();
            r.text << "known types (geometric input):";
            for (const auto& [n, t] : five_two_known_types()) {
                known.push_back({{"n", n}, {"type", to_string(t)}});
                r.text << " n=" << n << ":" << display_name(t);
            }
            r.text << "\n";
            r.result["known_types"] = known;
            r.result["bound"] = 5;
            bool attained = r.result["totals"]["total_non_certified"] == 5;
            r.result["bound_attained"] = attained;
            r.text << "bound 5 " << (attained ? "attained" : "not attained") << "\n";
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << synopsis(leaf);
        return kUsage;
    } catch (const ValidationError& e) {
        r.code = kValidation;
        r.result = {{"error", e.what()}};
        for (auto& [key, val] : e.detail.items()) r.result[key] = val;
        r.text.str("");
        err << "error: " << e.what() << "\n";
    } catch (const std::overflow_error& e) {
        r.code = kValidation;
        r.result = {{"error", std::string("out of supported range: ") + e.what()}};
        r.text.str("");
        err << "error: out of supported range: " << e.what() << "\n";
    } catch (const std::length_error& e) {
        r.code = kValidation;
        r.result = {{"error", std::string("out of supported range: ") + e.what()}};
        r.text.str("");
        err << "error: out of supported range: " << e.what() << "\n";
    }

    if (as_json) {
        json doc = {{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"warnings", r.warnings}};
        out << doc.dump(2) << "\n";
    } else {
        out << r.text.str();
        for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    }
    return r.code;
}

}  // namespace hka::cli
