// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hkannuli/boundary.hpp"
#include "hkannuli/classify.hpp"
#include "hkannuli/jsjgraph.hpp"
#include "hkannuli/tangle.hpp"
#include "oracles.hpp"

using namespace hka;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream note;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

using Criterion = std::function<void(Check&)>;

// Criterion 2 and 7 share one sample.
std::vector<TypeKParams> sample_params() {
    std::mt19937_64 rng(20240601);
    std::vector<TypeKParams> out;
    for (int i = 0; i < 1000; ++i) out.push_back(oracle::random_params(rng, 20, 10, 10, 5, 10));
    return out;
}

void five_two(Check& c) {
    TypeKParams k = five_two_params();
    for (std::int64_t n = -100; n <= 100; ++n)
        c.expect(boundary_word(k, n) == Word::v(n) * Word::u(n + 1), "word at n=" + std::to_string(n));
    std::set<std::int64_t> inc;
    for (std::int64_t n = -100; n <= 100; ++n)
        if (classify_typeK_annulus(k, n).verdict == Verdict::Inconclusive) inc.insert(n);
    c.expect(inc == std::set<std::int64_t>{-2, -1, 0, 1}, "inconclusive set");
    auto r = typeK_census(k, 100);
    c.expect(r.total_non_certified == 5, "census total");
    c.note << "inconclusive {-2,-1,0,1}, total non-certified " << r.total_non_certified;
}

void typek_bound(Check& c) {
    auto ps = sample_params();
    std::size_t max_window = 0, checked = 0;
    for (const auto& k : ps) {
        auto win = nonType41_window(k);
        max_window = std::max(max_window, win.size());
        c.expect(win.size() <= 4, "window size");
        for (std::int64_t n = -200; n <= 200; ++n) {
            if (win.count(n)) continue;
            ++checked;
            c.expect(classify_typeK_annulus(k, n).verdict == Verdict::Type41Certified,
                     "uncertified n=" + std::to_string(n) + " outside window");
        }
    }
    c.note << ps.size() << " params, " << checked << " n certified, max window " << max_window;
}

void claim_arith(Check& c) {
    std::size_t cases = 0;
    for (std::int64_t p = -50; p <= 50; ++p) {
        if (p > -2 && p < 2) continue;
        for (std::int64_t q = 1; q <= 50; ++q)
            for (std::int64_t d = 0; d < q; ++d) {
                if (!check_params({p, q, d, 0, 0, 0, 0}).empty()) continue;
                for (std::int64_t D = 2; D <= 10; ++D)
                    for (std::int64_t s : {D, -D}) {
                        std::int64_t g = delta_claim_gamma(p, q, d, s);
                        c.expect(g != 2 * q && g != -2 * q, "gamma = +-2q");
                        ++cases;
                    }
            }
    }
    c.note << cases << " cases";
}

// Proper power by string periodicity of a cyclically reduced word.
std::string periodic_root(const std::string& s) {
    const std::size_t n = s.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool rep = true;
        for (std::size_t i = d; i < n && rep; ++i) rep = s[i] == s[i - d];
        if (rep) return s.substr(0, d);
    }
    return s;
}

void cho_koda(Check& c) {
    const auto prim = oracle::primitive_classes(10, 12);
    std::size_t words = 0, fired = 0;
    for (int n = 1; n <= 10; ++n)
        for (const auto& s : oracle::cyclically_reduced_words(n)) {
            ++words;
            Word w = parse_word(s);
            Word r = parse_word(periodic_root(s));
            bool pop_oracle = prim.count(oracle::letters(CyclicWord(r).canonical())) > 0;
            c.expect(is_power_of_primitive(w) == pop_oracle, "Whitehead vs orbit on " + s);
            if (cho_koda_criterion(w)) {
                ++fired;
                c.expect(!is_power_of_primitive(w), "false positive " + s);
            }
        }
    c.note << words << " words, criterion fired on " << fired << ", 0 false positives expected";
}

void anchors(Check& c) {
    Word x = parse_word("u^2 v"), y = parse_word("v^-3 u"), z = parse_word("u v u^-1 v");
    for (std::int64_t rho = 0; rho <= 50; ++rho) {
        c.expect(interpolating(reference_crossings(rho, 0).ext, x, y, z) == z.pow(rho),
                 "beta=0 rho=" + std::to_string(rho));
        c.expect(interpolating(reference_crossings(rho, -1).ext, x, y, z) == x.inverse() * z.pow(-rho) * y,
                 "beta=-1 rho=" + std::to_string(rho));
    }
    std::size_t exts = 0;
    for (std::int64_t rho = 0; rho <= 50; ++rho)
        for (std::int64_t beta = -20; beta <= -1; ++beta) {
            if (!slope_is_valid(rho, beta)) continue;
            auto rc = reference_crossings(rho, beta);
            const auto& e = rc.ext;
            ++exts;
            c.expect(!e.entries.empty() && e.entries.front() == -1 && e.entries.back() == 1, "end entries");
            c.expect(!e.kappa.empty() && e.kappa.front() == 1 && e.kappa.back() == e.sigma(), "ends inside A");
        }
    c.note << "rho <= 50, " << exts << " negative-beta extensions";
}

void normalization(Check& c) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        TypeKParams k = oracle::random_params(rng, 20, 10, 10, -5, -1, 10);
        auto np = normalize_negative_beta(k);
        c.expect(np.params.mu == k.mu + 2 && np.params.lambda == k.lambda - 2 && np.params.beta == -k.beta - 1,
                 "shifted params");
        for (std::int64_t n = -5; n <= 5; ++n)
            c.expect(are_conjugate(boundary_word(k, n), boundary_word(np.seq, np.params, n)),
                     "conjugacy n=" + std::to_string(n));
    }
    c.note << "200 params, n in [-5, 5]";
}

void bezout(Check& c) {
    std::size_t direct = 0, shifted = 0, other = 0;
    for (const auto& k : sample_params()) {
        TypeKParams b;
        if (k.beta == 0) {
            b = k;
            ++direct;
        } else if (k.beta == -1) {
            b = normalize_negative_beta(k).params;
            ++shifted;
        } else {
            ++other;
            continue;
        }
        auto h = homology_class(b);
        std::int64_t D = b.mu - b.lambda;
        c.expect(b.q * h.theta - b.p * (b.q * D + b.delta) == 1, "determinant");
        c.expect(h.L == b.q * D + b.delta, "L");
    }
    c.note << direct << " beta=0, " << shifted << " beta=-1 normalized; " << other
           << " other beta have no homology class";
}

void type_m(Check& c) {
    for (long p = -1000; p <= 1000; ++p) {
        bool trivial = p == 0 || p == -1;
        c.expect((classify_typeM(p) == AnnulusType::T3_2ii) == trivial, "classify_typeM p=" + std::to_string(p));
        RationalTangle t({BigInt(-p), BigInt(2), BigInt(0)});
        c.expect(is_integral(cf_eval(t, TwistConvention::Mirrored)) == trivial, "mirrored R(-p,2,0)");
    }
    c.note << "p in [-1000, 1000]";
}

void type_s(Check& c) {
    auto a = classify_typeS(3, 2, std::nullopt);
    c.expect(a.first == AnnulusType::T3_2ii && a.second == AnnulusType::T3_2i, "(3, 2)");
    bool threw = false;
    try {
        classify_typeS(2, 1, std::nullopt);
    } catch (const MissingFact&) {
        threw = true;
    }
    c.expect(threw, "q=1 without fact");
    auto b = classify_typeS(2, 1, true);
    c.expect(b.first == AnnulusType::T3_2ii && b.second == AnnulusType::T3_2ii, "q=1 with fact");
}

void em(Check& c) {
    for (long l = -10; l <= 10; ++l)
        for (long m = -10; m <= 10; ++m)
            for (long n = -10; n <= 10; ++n)
                for (long p = -10; p <= 10; ++p) {
                    long stated = 2 * m * p * l - 2 * p - p * l - m * l + 1;
                    long proof = 2 * l * m * p - l * p - l * m - 2 * p + 1;
                    c.expect(stated == proof, "polynomials");
                    bool m_shape = std::abs(l) != 2 && std::abs(proof) != 2;
                    auto g = em_jsj_graph({l, m, n, p}, EmSide::Plus);
                    c.expect((g.shape == JsjShape::GraphM) == m_shape, "shape");
                }
    c.note << "21^4 grid";
}

JsjGraph load(const std::string& f) {
    std::ifstream in(std::string(HKANN_TEST_DATA_DIR) + "/" + f);
    if (!in) throw std::runtime_error("missing " + f);
    return parse_jsj_graph(in);
}

void jsj(Check& c) {
    auto cites = [](const std::vector<Violation>& v, const std::string& rule, const std::string& lemma) {
        for (const auto& x : v)
            if (x.rule == rule && x.lemma == lemma) return true;
        return false;
    };
    c.expect(cites(validate_labels(load("loop_t21.jsj")), rules::kLoopLabels, "loop edge lemma"), "loop T2_1");
    c.expect(cites(validate_labels(load("bigon_t32i.jsj")), rules::kParallelLabels, "bigon edge lemma"),
             "bigon T3_2i");
    c.expect(cites(validate_labels(load("t41.jsj")), rules::kType41, "type 4-1 classification theorem"), "T4_1");
    JsjGraph t = load("trivial.jsj");
    c.expect(validate_structure(t).empty() && validate_labels(t).empty(), "trivial accepted");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> all = {
        {"5_2 reproduction", five_two},
        {"type-K bound", typek_bound},
        {"|Delta| <= 1 arithmetic", claim_arith},
        {"Cho-Koda soundness", cho_koda},
        {"interpolating anchors", anchors},
        {"negative-beta normalization", normalization},
        {"Bezout determinant", bezout},
        {"type-M endpoints", type_m},
        {"type-S", type_s},
        {"EM polynomial identity", em},
        {"JSJ validator", jsj},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            all[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.note << "exception: " << e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (c.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << all[i].first << " (" << c.note.str()
                  << "; " << s << " s)" << std::endl;
        if (!c.ok) ++failed;
    }
    return failed ? 1 : 0;
}
