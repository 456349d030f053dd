#include "hkannuli/freegroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hka {

namespace detail {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("word exponent overflow");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("word exponent overflow");
    return r;
}

std::int64_t abs_checked(std::int64_t a) {
    if (a == std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("word exponent overflow");
    return a < 0 ? -a : a;
}

}  // namespace detail

using detail::add;
using detail::mul;

namespace {

// Push a block onto a reduced stack, merging with the top when possible.
void push_block(std::vector<Block>& out, Block b) {
    if (b.exp == 0) return;
    if (!out.empty() && out.back().gen == b.gen) {
        std::int64_t e = add(out.back().exp, b.exp);
        if (e == 0)
            out.pop_back();
        else
            out.back().exp = e;
        return;
    }
    out.push_back(b);
}

std::int64_t sgn(std::int64_t x) { return (x > 0) - (x < 0); }

Word from_blocks(std::span<const Block> bs) { return Word::reduce(bs); }

}  // namespace

Word Word::reduce(std::span<const Block> raw) {
    Word w;
    for (const Block& b : raw) push_block(w.blocks_, b);
    return w;
}

Word Word::gen(Gen g, std::int64_t e) {
    Block b{g, e};
    return reduce(std::span<const Block>(&b, 1));
}

std::int64_t Word::length() const {
    std::int64_t n = 0;
    for (const Block& b : blocks_) n = add(n, detail::abs_checked(b.exp));
    return n;
}

Word Word::inverse() const {
    Word w;
    w.blocks_.reserve(blocks_.size());
    for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it)
        w.blocks_.push_back({it->gen, mul(it->exp, -1)});
    return w;
}

Word Word::pow(std::int64_t k) const {
    if (k == 0 || is_identity()) return {};
    Word base = k > 0 ? *this : inverse();
    std::int64_t n = detail::abs_checked(k);
    CyclicReduction cr = cyclic_reduce(base);
    const auto& cb = cr.core.blocks();
    std::vector<Block> raw;
    if (cb.size() == 1) {
        raw.push_back({cb[0].gen, mul(cb[0].exp, n)});
    } else {
        // Cyclically reduced core: only the seam between copies can merge.
        if (mul(static_cast<std::int64_t>(cb.size()), n) > (std::int64_t{1} << 26))
            throw std::length_error("word power too large");
        raw.reserve(cb.size() * static_cast<std::size_t>(std::min<std::int64_t>(n, 1 << 20)));
        for (std::int64_t i = 0; i < n; ++i) raw.insert(raw.end(), cb.begin(), cb.end());
    }
    Word core = Word::reduce(raw);
    return cr.conjugator * core * cr.conjugator.inverse();
}

Word concat(const Word& a, const Word& b) {
    std::vector<Block> raw(a.blocks());
    for (const Block& x : b.blocks()) push_block(raw, x);
    return Word::reduce(raw);
}

Word invert(const Word& a) { return a.inverse(); }

CyclicReduction cyclic_reduce(const Word& w) {
    std::vector<Block> bs = w.blocks();
    std::vector<Block> prefix;  // stripped conjugator, left to right
    std::size_t lo = 0, hi = bs.size();
    while (hi - lo >= 2) {
        Block& f = bs[lo];
        Block& l = bs[hi - 1];
        if (f.gen != l.gen || sgn(f.exp) == sgn(l.exp)) break;
        std::int64_t t = std::min(detail::abs_checked(f.exp), detail::abs_checked(l.exp));
        std::int64_t s = sgn(f.exp);
        push_block(prefix, {f.gen, s * t});
        f.exp -= s * t;
        l.exp += s * t;
        if (f.exp == 0) ++lo;
        if (l.exp == 0) --hi;
        // After removing a block the new ends may be adjacent same-generator
        // blocks only if lo == hi - 1, which the loop condition handles.
    }
    CyclicReduction out;
    out.core = Word::reduce(std::span<const Block>(bs.data() + lo, hi - lo));
    out.conjugator = Word::reduce(prefix);
    return out;
}

bool is_cyclically_reduced(const Word& w) {
    const auto& b = w.blocks();
    if (b.size() < 2) return true;
    return !(b.front().gen == b.back().gen && sgn(b.front().exp) != sgn(b.back().exp));
}

namespace detail {

AlignedCycle align_cycle(const Word& w) {
    CyclicReduction cr = cyclic_reduce(w);
    AlignedCycle out;
    out.blocks = cr.core.blocks();
    out.conjugator = cr.conjugator;
    if (out.blocks.size() >= 2 && out.blocks.front().gen == out.blocks.back().gen) {
        Block last = out.blocks.back();
        out.blocks.pop_back();
        out.blocks.front().exp = add(out.blocks.front().exp, last.exp);
        out.conjugator = out.conjugator * Word::gen(last.gen, -last.exp);
    }
    return out;
}

}  // namespace detail

namespace {

using detail::AlignedCycle;
using detail::align_cycle;

int letter_code(const Block& b) { return 2 * static_cast<int>(b.gen) + (b.exp < 0 ? 1 : 0); }

// Lexicographic comparison of the letter strings read cyclically from
// block i and from block j. Returns <0, 0, >0.
int compare_rotations(const std::vector<Block>& bs, std::size_t i, std::size_t j) {
    const std::size_t m = bs.size();
    std::size_t bi = i, bj = j;
    std::int64_t ri = detail::abs_checked(bs[bi].exp), rj = detail::abs_checked(bs[bj].exp);
    std::size_t consumed_i = 0;
    while (consumed_i < m) {
        int ci = letter_code(bs[bi]), cj = letter_code(bs[bj]);
        if (ci != cj) return ci < cj ? -1 : 1;
        std::int64_t step = std::min(ri, rj);
        ri -= step;
        rj -= step;
        if (ri == 0) {
            bi = (bi + 1) % m;
            ++consumed_i;
            ri = detail::abs_checked(bs[bi].exp);
        }
        if (rj == 0) {
            bj = (bj + 1) % m;
            rj = detail::abs_checked(bs[bj].exp);
        }
    }
    return 0;
}

std::vector<Block> rotate_blocks(const std::vector<Block>& bs, std::size_t s) {
    std::vector<Block> out;
    out.reserve(bs.size());
    for (std::size_t k = 0; k < bs.size(); ++k) out.push_back(bs[(s + k) % bs.size()]);
    return out;
}

Word canonical_form(const Word& w) {
    AlignedCycle ac = align_cycle(w);
    if (ac.blocks.size() <= 1) return from_blocks(ac.blocks);
    // A least rotation of the letter string always starts at a block start.
    std::size_t best = 0;
    for (std::size_t s = 1; s < ac.blocks.size(); ++s)
        if (compare_rotations(ac.blocks, s, best) < 0) best = s;
    return from_blocks(rotate_blocks(ac.blocks, best));
}

}  // namespace

CyclicWord::CyclicWord(Word w) : rep_(std::move(w)), canon_(canonical_form(rep_)) {}

bool are_conjugate(const Word& a, const Word& b) {
    return canonical_form(a) == canonical_form(b);
}

Root root(const Word& w) {
    if (w.is_identity()) throw std::invalid_argument("root: identity has no root");
    AlignedCycle ac = align_cycle(w);
    const Word& g = ac.conjugator;
    if (ac.blocks.size() == 1) {
        const Block& b = ac.blocks[0];
        Word r = g * Word::gen(b.gen, sgn(b.exp)) * g.inverse();
        return {r, detail::abs_checked(b.exp)};
    }
    const std::size_t m = ac.blocks.size();
    for (std::size_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + d < m && periodic; ++i)
            periodic = ac.blocks[i] == ac.blocks[i + d];
        if (!periodic) continue;
        Word r = g * from_blocks(std::span<const Block>(ac.blocks.data(), d)) * g.inverse();
        return {r, static_cast<std::int64_t>(m / d)};
    }
    throw std::logic_error("root: unreachable");
}

std::pair<std::int64_t, std::int64_t> abelianization(const Word& w) {
    std::int64_t a = 0, b = 0;
    for (const Block& x : w.blocks()) (x.gen == Gen::U ? a : b) = add(x.gen == Gen::U ? a : b, x.exp);
    return {a, b};
}

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

// One term weight * |g + c*k| of the cyclic length after the move that
// multiplies the moving generator on the right by fixed^k.
struct GapTerm {
    i128 weight;
    i128 g;
    int c;
};

struct MoveModel {
    i128 base = 0;  // letters of the moving generator
    std::vector<GapTerm> terms;

    i128 length_at(i128 k) const {
        i128 s = base;
        for (const GapTerm& t : terms) s += t.weight * abs128(t.g + t.c * k);
        return s;
    }
};

// blocks: aligned cycle with both generators present.
MoveModel model_for(const std::vector<Block>& bs, Gen moving) {
    MoveModel m;
    const std::size_t n = bs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Block& b = bs[i];
        if (b.gen != moving) continue;
        i128 e = b.exp;
        int s = b.exp > 0 ? 1 : -1;
        m.base += abs128(e);
        // Gaps inside the block.
        if (abs128(e) > 1) m.terms.push_back({abs128(e) - 1, 0, s});
        // Gap to the next moving block, through one fixed block.
        const Block& f = bs[(i + 1) % n];
        const Block& nx = bs[(i + 2) % n];
        int s2 = nx.exp > 0 ? 1 : -1;
        int c = (s > 0 ? 1 : 0) - (s2 < 0 ? 1 : 0);
        m.terms.push_back({1, f.exp, c});
    }
    return m;
}

i128 weighted_median(const MoveModel& m) {
    std::vector<std::pair<i128, i128>> pts;  // breakpoint, weight
    i128 total = 0;
    for (const GapTerm& t : m.terms) {
        if (t.c == 0) continue;
        pts.push_back({-t.g * t.c, t.weight});
        total += t.weight;
    }
    if (pts.empty()) return 0;
    std::sort(pts.begin(), pts.end());
    i128 cum = 0;
    for (const auto& [x, w] : pts) {
        cum += w;
        if (2 * cum >= total) return x;
    }
    return pts.back().first;
}

std::vector<Block> apply_move(const std::vector<Block>& bs, Gen moving, std::int64_t k) {
    Gen fixed = other(moving);
    std::vector<Block> raw;
    for (const Block& b : bs) {
        if (b.gen != moving) {
            raw.push_back(b);
            continue;
        }
        std::int64_t n = detail::abs_checked(b.exp);
        for (std::int64_t i = 0; i < n; ++i) {
            if (b.exp > 0) {
                raw.push_back({moving, 1});
                raw.push_back({fixed, k});
            } else {
                raw.push_back({fixed, mul(k, -1)});
                raw.push_back({moving, -1});
            }
        }
    }
    return align_cycle(Word::reduce(raw)).blocks;
}

i128 cyclic_length(const std::vector<Block>& bs) {
    i128 s = 0;
    for (const Block& b : bs) s += abs128(b.exp);
    return s;
}

}  // namespace

std::int64_t whitehead_minimal_length(const Word& w) {
    std::vector<Block> bs = align_cycle(w).blocks;
    while (bs.size() >= 2) {
        i128 current = cyclic_length(bs);
        i128 best_len = current;
        Gen best_gen = Gen::U;
        i128 best_k = 0;
        for (Gen moving : {Gen::V, Gen::U}) {
            MoveModel m = model_for(bs, moving);
            i128 k = weighted_median(m);
            i128 len = m.length_at(k);
            if (len < best_len) {
                best_len = len;
                best_gen = moving;
                best_k = k;
            }
        }
        if (best_len >= current) break;
        if (best_k > std::numeric_limits<std::int64_t>::max() ||
            best_k < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("word exponent overflow");
        bs = apply_move(bs, best_gen, static_cast<std::int64_t>(best_k));
    }
    i128 len = cyclic_length(bs);
    if (len > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("word length overflow");
    return static_cast<std::int64_t>(len);
}

bool is_primitive(const Word& w) {
    if (w.is_identity()) return false;
    return whitehead_minimal_length(w) == 1;
}

bool is_power_of_primitive(const Word& w) {
    if (w.is_identity()) throw std::invalid_argument("is_power_of_primitive: identity");
    return is_primitive(root(w).r);
}

bool cho_koda_criterion(const Word& w) {
    AlignedCycle ac = align_cycle(w);
    std::vector<Block>& bs = ac.blocks;
    if (bs.size() < 2 || bs.size() % 2 != 0) return false;
    if (bs.front().gen != Gen::U) std::rotate(bs.begin(), bs.begin() + 1, bs.end());
    const std::size_t n = bs.size() / 2;
    // eps[i] = bs[2i] (u-blocks), eta[i] = bs[2i+1] (v-blocks)
    bool eps_vary = false, eta_vary = false;
    for (std::size_t i = 1; i < n; ++i) {
        eps_vary |= bs[2 * i].exp != bs[0].exp;
        eta_vary |= bs[2 * i + 1].exp != bs[1].exp;
    }
    if (eps_vary && eta_vary) return true;
    // Some rotation with a u-block of |exp| > 1 directly after a v-block of
    // |exp| > 1 (cyclically).
    for (std::size_t i = 0; i < n; ++i) {
        const Block& eps = bs[2 * i];
        const Block& eta_prev = bs[(2 * i + bs.size() - 1) % bs.size()];
        if (detail::abs_checked(eps.exp) > 1 && detail::abs_checked(eta_prev.exp) > 1) return true;
    }
    return false;
}

}  // namespace hka
