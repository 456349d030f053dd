#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hkannuli/bigint.hpp"
#include "hkannuli/boundary.hpp"
#include "hkannuli/freegroup.hpp"

namespace hka {

enum class AnnulusType { T1, T2_1, T2_2, T3_1, T3_2i, T3_2ii, T3_3i, T3_3ii, T4_1, T4_2 };

std::string to_string(AnnulusType t);            // "T3_2ii"
std::string display_name(AnnulusType t);         // "3-2ii"
std::optional<AnnulusType> parse_annulus_type(std::string_view s);  // either form

enum class Verdict { Type41Certified, Inconclusive };
std::string to_string(Verdict v);

// Type41Certified: criterion is "cho-koda" or "whitehead-oracle".
// Inconclusive: witness is the root r (primitive) of the boundary word, or
// the identity with criterion "trivial-word". Inconclusive only means the
// word test is silent; it needs geometric input.
struct ClassificationOutcome {
    Verdict verdict;
    std::string criterion;
    std::optional<Word> witness;
    std::int64_t power = 0;  // k in w = r^k, Inconclusive only
};

ClassificationOutcome classify_typeK_annulus(const TypeKParams& params, std::int64_t n);

// n outside this set are certified type 4-1 by classify_typeK_annulus.
std::set<std::int64_t> nonType41_window(const TypeKParams& params);

AnnulusType classify_typeM(const BigInt& p);

// Thrown by classify_typeS for q = 1 without the triviality fact.
class MissingFact : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::pair<AnnulusType, AnnulusType> classify_typeS(const BigInt& p, const BigInt& q,
                                                   std::optional<bool> cv_trivial);

struct EmParams {
    BigInt l, m, n, p;
};

enum class EmSide { Plus, Minus };
enum class JsjShape { GraphK, GraphM };
std::string to_string(JsjShape s);

struct EmInvariants {
    BigInt o_alpha;
    BigInt o_beta;
};
// (|l|, |2lmp - lp - lm - 2p + 1|)
EmInvariants em_invariants(const EmParams& e);

struct EmGraphResult {
    JsjShape shape;
    std::vector<std::string> warnings;
};
EmGraphResult em_jsj_graph(const EmParams& e, EmSide side);

struct CensusEntry {
    std::int64_t n;
    ClassificationOutcome outcome;
};

struct CensusReport {
    TypeKParams params;
    std::set<std::int64_t> window;
    std::vector<CensusEntry> per_n;
    std::int64_t certified = 0;
    std::int64_t inconclusive = 0;
    std::int64_t non_separating = 1;  // the type 3-3 annulus
    std::int64_t total_non_certified = 0;
    bool window_covers_inconclusive = true;
};

// Throws std::logic_error if the inconclusive set leaves the window or the
// bound (4 separating, 5 total) fails.
CensusReport typeK_census(const TypeKParams& params, std::int64_t N);

// The 5_2 handlebody-knot family: q=1, delta=0, beta=0, lambda=1, mu=0.
// p does not enter the boundary word; 2 is used.
TypeKParams five_two_params();

// Annulus types of the four exceptional members, from geometric arguments
// (knot triviality and a symmetry) rather than computation.
const std::map<std::int64_t, AnnulusType>& five_two_known_types();

}  // namespace hka
