#include "hkannuli/boundary.hpp"

#include <numeric>

namespace hka {

using detail::add;
using detail::mul;

namespace {

std::string fmt(const char* name, std::int64_t v) { return std::string(name) + "=" + std::to_string(v); }

}  // namespace

std::vector<ParamViolation> check_params(const TypeKParams& k) {
    std::vector<ParamViolation> out;
    if (k.p == 0 || k.p == 1 || k.p == -1) out.push_back({"p-not-unit", fmt("p", k.p) + " must not be 0 or +-1"});
    const bool q_ok = k.q > 0;
    if (!q_ok) out.push_back({"q-positive", fmt("q", k.q) + " must be positive"});
    if (q_ok) {
        if (k.delta < 0 || k.delta >= k.q)
            out.push_back({"delta-range", fmt("delta", k.delta) + " must lie in [0, q)"});
        // p*delta + 1 = 0 mod q, computed without overflow.
        __int128 pd = static_cast<__int128>(k.p) * k.delta + 1;
        if (pd % k.q != 0) out.push_back({"delta-congruence", "p*delta + 1 is not divisible by q"});
        if (k.q == 2 && k.delta != 1) out.push_back({"q2-delta-one", "q=2 requires delta=1"});
        if (std::gcd(k.p, k.q) != 1) out.push_back({"p-q-coprime", "gcd(p, q) != 1"});
    }
    if (!slope_is_valid(k.rho, k.beta))
        out.push_back({"arc-slope", "need rho >= 0 and gcd(2rho, |2beta+1|) = 1 (" + fmt("rho", k.rho) + ", " +
                                        fmt("beta", k.beta) + ")"});
    __int128 d = static_cast<__int128>(k.mu) - k.lambda;
    if (k.beta == 0 && (d > 1 || d < -1))
        out.push_back({"delta-bound", "beta=0 requires |mu - lambda| <= 1"});
    if (k.beta == -1 && (d + 4 > 1 || d + 4 < -1))
        out.push_back({"delta-bound", "beta=-1 requires |mu - lambda + 4| <= 1"});
    return out;
}

std::vector<std::string> param_warnings(const TypeKParams& k) {
    std::vector<std::string> w;
    if ((k.q > 1) != (k.delta != 0)) w.push_back("expected q > 1 iff delta != 0");
    return w;
}

namespace {
std::string join_violations(const std::vector<ParamViolation>& v) {
    std::string s = "invalid type-K parameters:";
    for (const auto& x : v) s += " [" + x.name + ": " + x.detail + "]";
    return s;
}
}  // namespace

InvalidParams::InvalidParams(std::vector<ParamViolation> v)
    : std::invalid_argument(join_violations(v)), violations_(std::move(v)) {}

TypeKParams validate_params(const TypeKParams& raw) {
    auto v = check_params(raw);
    if (!v.empty()) throw InvalidParams(std::move(v));
    return raw;
}

std::int64_t middle_v_exponent(const TypeKParams& k, std::int64_t n) {
    return add(mul(k.q, add(n, k.mu)), k.delta);
}

std::int64_t middle_u_exponent(const TypeKParams& k, std::int64_t n) { return add(k.lambda, n); }

namespace {

Word assemble(const PairedUnitSequence& seq, const TypeKParams& k, std::int64_t n, bool negative) {
    Word u = Word::u(), vq = Word::v(k.q);
    Word first = negative ? alternating(seq, u, vq) : alternating(seq, vq, u);
    Word second = negative ? alternating(seq, vq.inverse(), u.inverse()) : alternating(seq, u.inverse(), vq.inverse());
    return first * Word::v(middle_v_exponent(k, n)) * second * Word::u(middle_u_exponent(k, n));
}

void check_arithmetic(const TypeKParams& k) {
    auto v = check_params(k);
    std::erase_if(v, [](const ParamViolation& x) { return x.name == "arc-slope" || x.name == "delta-bound"; });
    if (!v.empty()) throw InvalidParams(std::move(v));
}

}  // namespace

Word boundary_word(const TypeKParams& params, std::int64_t n) {
    validate_params(params);
    return assemble(reference_crossings(params.rho, params.beta).seq, params, n, params.beta < 0);
}

Word boundary_word(const PairedUnitSequence& seq, const TypeKParams& params, std::int64_t n) {
    check_arithmetic(params);
    return assemble(seq, params, n, false);
}

NormalizedParams normalize_negative_beta(const TypeKParams& params) {
    validate_params(params);
    if (params.beta >= 0) throw std::invalid_argument("normalize_negative_beta: beta must be negative");
    const auto full = reference_crossings(params.rho, params.beta).seq.entries;
    NormalizedParams out;
    out.params = params;
    out.params.beta = -params.beta - 1;
    out.params.mu = add(params.mu, 2);
    out.params.lambda = add(params.lambda, -2);
    out.seq.entries.assign(full.begin() + 1, full.end() - 1);

    Word u = Word::u(), vq = Word::v(params.q);
    out.witness_lhs = alternating(PairedUnitSequence{full}, u, vq);
    out.witness_rhs = u.inverse() * alternating(out.seq, vq, u) * vq;
    if (full.front() != -1 || full.back() != 1 || !(out.witness_lhs == out.witness_rhs))
        throw std::logic_error("normalize_negative_beta: sequence identity failed");
    for (std::int64_t n = -3; n <= 3; ++n)
        if (!are_conjugate(boundary_word(params, n), boundary_word(out.seq, out.params, n)))
            throw std::logic_error("normalize_negative_beta: conjugacy check failed at n=" + std::to_string(n));
    return out;
}

BoundaryImages default_images(const TypeKParams& k) {
    return {Word::u(), Word::v(k.q), Word{}, Word{}, Word::v(k.delta)};
}

namespace {
void check_split(const TypeKParams& k, const TwistSplit& s) {
    if (add(s.lambda_plus, s.lambda_minus) != k.lambda || add(s.mu_plus, s.mu_minus) != k.mu)
        throw std::invalid_argument("twist split does not sum to (lambda, mu)");
}
}  // namespace

Word k_plus_word(const TypeKParams& params, const TwistSplit& split, const BoundaryImages& im) {
    validate_params(params);
    check_split(params, split);
    ArcCoordinate c{params.rho, params.beta, split.lambda_plus, split.mu_plus};
    return arc_word(c, {im.l2, im.l1_hat, im.a2_hat, im.s_plus});
}

Word k_minus_word(const TypeKParams& params, const TwistSplit& split, const BoundaryImages& im) {
    validate_params(params);
    check_split(params, split);
    ReferenceCrossings rc = reference_crossings(params.rho, params.beta);
    Word l2i = im.l2.inverse(), l1i = im.l1_hat.inverse(), ai = im.a2_hat.inverse();
    Word mid = params.beta >= 0 ? interpolating(rc.ext, l2i, l1i, ai) : interpolating(rc.ext, l1i, l2i, ai);
    return im.s_minus * im.l1_hat.pow(split.mu_minus) * mid * im.l2.pow(split.lambda_minus);
}

Word boundary_composite(const TypeKParams& params, const TwistSplit& split, const BoundaryImages& im,
                        std::int64_t n) {
    Word l1 = im.s_plus.inverse() * im.l1_hat * im.s_plus;
    return k_plus_word(params, split, im) * l1.pow(n) * k_minus_word(params, split, im) * im.l2.pow(n);
}

HomologyClass homology_class(const TypeKParams& params) {
    validate_params(params);
    if (params.beta != 0) throw std::invalid_argument("homology_class: requires beta = 0");
    std::int64_t D = add(params.mu, -params.lambda);
    std::int64_t num = add(mul(params.p, params.delta), 1);
    if (num % params.q != 0) throw std::logic_error("homology_class: (p*delta + 1)/q not integral");
    return {add(mul(params.p, D), num / params.q), add(mul(params.q, D), params.delta)};
}

std::int64_t delta_claim_gamma(std::int64_t p, std::int64_t q, std::int64_t delta, std::int64_t Delta) {
    return add(mul(p, add(mul(q, Delta), delta)), 1);
}

}  // namespace hka
