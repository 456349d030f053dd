#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkannuli/arcs.hpp"
#include "hkannuli/freegroup.hpp"

namespace hka {

// Parameters of a type-K family of separating annuli A_n. lambda and mu
// are the merged twist counts (lambda_+ + lambda_-, mu_+ + mu_-).
struct TypeKParams {
    std::int64_t p = 0;
    std::int64_t q = 1;
    std::int64_t delta = 0;
    std::int64_t rho = 0;
    std::int64_t beta = 0;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    bool operator==(const TypeKParams&) const = default;
};

struct ParamViolation {
    std::string name;
    std::string detail;
};

// Every violated invariant, by name:
//   p-not-unit        p not in {0, 1, -1}
//   q-positive        q > 0
//   delta-range       0 <= delta < q
//   delta-congruence  p*delta = -1 mod q
//   q2-delta-one      q = 2 implies delta = 1
//   p-q-coprime       gcd(p, q) = 1
//   arc-slope         rho >= 0 and gcd(2rho, |2beta+1|) = 1
//   delta-bound       |mu - lambda| <= 1 when beta = 0,
//                     |mu - lambda + 4| <= 1 when beta = -1
std::vector<ParamViolation> check_params(const TypeKParams& raw);

// Diagnostics that never reject (currently: q > 1 iff delta != 0).
std::vector<std::string> param_warnings(const TypeKParams& raw);

class InvalidParams : public std::invalid_argument {
public:
    explicit InvalidParams(std::vector<ParamViolation> v);
    const std::vector<ParamViolation>& violations() const { return violations_; }

private:
    std::vector<ParamViolation> violations_;
};

// Returns raw unchanged or throws InvalidParams listing every violation.
TypeKParams validate_params(const TypeKParams& raw);

// A_beta(v^q, u) v^{q(n+mu)+delta} A_beta(u^-1, v^-q) u^{lambda+n} for
// beta >= 0, and A_-beta(u, v^q) v^{...} A_-beta(v^-q, u^-1) u^{lambda+n}
// otherwise, with the sequence of the reference arc.
Word boundary_word(const TypeKParams& params, std::int64_t n);

// Same shape with an explicit sequence in the beta >= 0 role. Only the
// arithmetic invariants are checked, not the slope.
Word boundary_word(const PairedUnitSequence& seq, const TypeKParams& params, std::int64_t n);

// v-exponent q(n+mu)+delta and u-exponent lambda+n of the middle powers.
std::int64_t middle_v_exponent(const TypeKParams& params, std::int64_t n);
std::int64_t middle_u_exponent(const TypeKParams& params, std::int64_t n);

// beta' = -beta-1, mu' = mu+2, lambda' = lambda-2 and the inner sequence
// A' = (u_2, ..., u_{2|beta|-1}). The witness pair satisfies
// A_-beta(u, v^q) = u^-1 A'_beta'(v^q, u) v^q; it and the conjugacy of the
// boundary words for n in [-3, 3] are checked on every call.
struct NormalizedParams {
    TypeKParams params;
    PairedUnitSequence seq;
    Word witness_lhs;
    Word witness_rhs;
};
NormalizedParams normalize_negative_beta(const TypeKParams& params);

// Split twists and the images of the generating loops and arcs.
struct TwistSplit {
    std::int64_t lambda_plus = 0;
    std::int64_t mu_plus = 0;
    std::int64_t lambda_minus = 0;
    std::int64_t mu_minus = 0;
};

struct BoundaryImages {
    Word l2;
    Word l1_hat;
    Word a2_hat;
    Word s_plus;
    Word s_minus;
};

// l2 -> u, l1^ -> v^q, a2^ -> 1, s_+ -> 1, s_- -> v^delta.
BoundaryImages default_images(const TypeKParams& params);

Word k_plus_word(const TypeKParams& params, const TwistSplit& split, const BoundaryImages& images);
Word k_minus_word(const TypeKParams& params, const TwistSplit& split, const BoundaryImages& images);

// k_+ l_1^n k_- l_2^n with l_1 = s_+^-1 l1^ s_+.
Word boundary_composite(const TypeKParams& params, const TwistSplit& split,
                        const BoundaryImages& images, std::int64_t n);

struct HomologyClass {
    std::int64_t theta;
    std::int64_t L;
};

// beta = 0 only. Delta = mu - lambda, L = q Delta + delta,
// Theta = p Delta + (p delta + 1)/q.
HomologyClass homology_class(const TypeKParams& params);

// p (q Delta + delta) + 1
std::int64_t delta_claim_gamma(std::int64_t p, std::int64_t q, std::int64_t delta, std::int64_t Delta);

}  // namespace hka
