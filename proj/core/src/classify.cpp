#include "hkannuli/classify.hpp"

#include <array>
#include <stdexcept>

namespace hka {

namespace {

struct TypeName {
    AnnulusType t;
    const char* tag;
    const char* display;
};

constexpr std::array<TypeName, 10> kTypes{{
    {AnnulusType::T1, "T1", "1"},
    {AnnulusType::T2_1, "T2_1", "2-1"},
    {AnnulusType::T2_2, "T2_2", "2-2"},
    {AnnulusType::T3_1, "T3_1", "3-1"},
    {AnnulusType::T3_2i, "T3_2i", "3-2i"},
    {AnnulusType::T3_2ii, "T3_2ii", "3-2ii"},
    {AnnulusType::T3_3i, "T3_3i", "3-3i"},
    {AnnulusType::T3_3ii, "T3_3ii", "3-3ii"},
    {AnnulusType::T4_1, "T4_1", "4-1"},
    {AnnulusType::T4_2, "T4_2", "4-2"},
}};

const TypeName& entry(AnnulusType t) {
    for (const auto& e : kTypes)
        if (e.t == t) return e;
    throw std::logic_error("unknown annulus type");
}

}  // namespace

std::string to_string(AnnulusType t) { return entry(t).tag; }
std::string display_name(AnnulusType t) { return entry(t).display; }

std::optional<AnnulusType> parse_annulus_type(std::string_view s) {
    for (const auto& e : kTypes)
        if (s == e.tag || s == e.display) return e.t;
    return std::nullopt;
}

std::string to_string(Verdict v) {
    return v == Verdict::Type41Certified ? "type-4-1-certified" : "inconclusive";
}

ClassificationOutcome classify_typeK_annulus(const TypeKParams& params, std::int64_t n) {
    Word w = boundary_word(params, n);
    if (w.is_identity()) return {Verdict::Inconclusive, "trivial-word", Word{}, 0};
    if (cho_koda_criterion(w)) return {Verdict::Type41Certified, "cho-koda", std::nullopt, 0};
    Root r = root(w);
    if (!is_primitive(r.r)) return {Verdict::Type41Certified, "whitehead-oracle", std::nullopt, 0};
    return {Verdict::Inconclusive, "primitive-root", r.r, r.k};
}

namespace {

// n with q(n + mu) + delta = t, if any.
std::optional<std::int64_t> solve_v(const TypeKParams& k, std::int64_t t) {
    std::int64_t s = detail::add(t, -k.delta);
    if (s % k.q != 0) return std::nullopt;
    return detail::add(s / k.q, -k.mu);
}

}  // namespace

std::set<std::int64_t> nonType41_window(const TypeKParams& params) {
    validate_params(params);
    TypeKParams k = params;
    PairedUnitSequence seq;
    if (params.beta < 0) {
        NormalizedParams np = normalize_negative_beta(params);
        k = np.params;
        seq = np.seq;
    } else {
        seq = reference_crossings(params.rho, params.beta).seq;
    }
    std::set<std::int64_t> out;
    auto add_v = [&](std::int64_t t) {
        if (auto n = solve_v(k, t)) out.insert(*n);
    };
    auto add_u = [&](std::int64_t t) { out.insert(detail::add(t, -k.lambda)); };
    if (k.beta > 0) {
        // With s the first entry, odd entries constant forces the sequence
        // (s, -s, s, -s, ...); only then can the middle powers make the
        // word a power of a primitive.
        const std::int64_t s = seq.entries.front();
        add_v(0);
        add_v(detail::mul(k.q, s));
        add_u(0);
        add_u(-s);
    } else {
        for (std::int64_t t : {-1, 0, 1}) {
            add_v(t);
            add_u(t);
        }
    }
    return out;
}

AnnulusType classify_typeM(const BigInt& p) {
    return (p == 0 || p == -1) ? AnnulusType::T3_2ii : AnnulusType::T3_2i;
}

std::pair<AnnulusType, AnnulusType> classify_typeS(const BigInt& p, const BigInt& q, std::optional<bool> cv_trivial) {
    if (p == 0 || p == 1 || p == -1) throw std::invalid_argument("classify_typeS: p must not be 0 or +-1");
    if (q <= 0) throw std::invalid_argument("classify_typeS: q must be positive");
    if (q > 1) return {AnnulusType::T3_2ii, AnnulusType::T3_2i};
    if (!cv_trivial) throw MissingFact("classify_typeS: q=1 needs the external knot-triviality fact (--cv-trivial)");
    AnnulusType t = *cv_trivial ? AnnulusType::T3_2ii : AnnulusType::T3_2i;
    return {t, t};
}

std::string to_string(JsjShape s) { return s == JsjShape::GraphK ? "GraphK" : "GraphM"; }

EmInvariants em_invariants(const EmParams& e) {
    BigInt a = abs(e.l);
    BigInt b = abs(BigInt(2 * e.l * e.m * e.p - e.l * e.p - e.l * e.m - 2 * e.p + 1));
    return {a, b};
}

EmGraphResult em_jsj_graph(const EmParams& e, EmSide side) {
    EmGraphResult r;
    r.warnings.push_back("excluded (l, m, n, p) values are not available; input accepted unchecked");
    if (side == EmSide::Minus) {
        r.shape = JsjShape::GraphK;
        return r;
    }
    EmInvariants inv = em_invariants(e);
    r.shape = (inv.o_alpha != 2 && inv.o_beta != 2) ? JsjShape::GraphM : JsjShape::GraphK;
    return r;
}

CensusReport typeK_census(const TypeKParams& params, std::int64_t N) {
    if (N <= 0) throw std::invalid_argument("typeK_census: N must be positive");
    CensusReport rep;
    rep.params = validate_params(params);
    rep.window = nonType41_window(params);
    for (std::int64_t n = -N; n <= N; ++n) {
        CensusEntry e{n, classify_typeK_annulus(params, n)};
        if (e.outcome.verdict == Verdict::Type41Certified) {
            ++rep.certified;
        } else {
            ++rep.inconclusive;
            if (!rep.window.count(n)) rep.window_covers_inconclusive = false;
        }
        rep.per_n.push_back(std::move(e));
    }
    rep.total_non_certified = rep.inconclusive + rep.non_separating;
    if (!rep.window_covers_inconclusive) throw std::logic_error("typeK_census: inconclusive n outside window");
    if (rep.window.size() > 4 || rep.inconclusive > 4 || rep.total_non_certified > 5)
        throw std::logic_error("typeK_census: bound of four separating exceptions violated");
    return rep;
}

TypeKParams five_two_params() { return {2, 1, 0, 0, 0, 1, 0}; }

const std::map<std::int64_t, AnnulusType>& five_two_known_types() {
    static const std::map<std::int64_t, AnnulusType> table{
        {-2, AnnulusType::T3_2i},
        {-1, AnnulusType::T3_2ii},
        {0, AnnulusType::T3_2ii},
        {1, AnnulusType::T3_2i},
    };
    return table;
}

}  // namespace hka
