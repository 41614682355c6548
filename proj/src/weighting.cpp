#include "oddcover/weighting.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcover {

namespace {

BigInt mod_pow2(const BigInt& t, int k) {
    BigInt m = BigInt(1) << k;
    BigInt r = t % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

ParityFunction1D::ParityFunction1D(int k) : k_(k), table_(period_table(k)) {}

int ParityFunction1D::eval(const BigInt& t) const {
    return table_[static_cast<std::size_t>(mod_pow2(t, k_))];
}

std::vector<std::uint8_t> period_table(int k) {
    if (k < 0) throw std::invalid_argument("period_table: negative level");
    if (k > kMaxWeightingLevel) throw std::runtime_error("period_table: level above configured maximum");
    std::vector<std::uint8_t> prev{1};  // f_0
    for (int lvl = 1; lvl <= k; ++lvl) {
        std::vector<std::uint8_t> cur(std::size_t(1) << lvl);
        cur[0] = 1;
        for (std::size_t t = 1; t < cur.size(); ++t)
            cur[t] = cur[t - 1] ^ prev[(t - 1) & (prev.size() - 1)];
        prev = std::move(cur);
    }
    return prev;
}

int f_eval(int k, const BigInt& t) {
    static thread_local std::vector<std::vector<std::uint8_t>> cache;
    if (k < 0) throw std::invalid_argument("f_eval: negative level");
    while (static_cast<int>(cache.size()) <= k) cache.push_back(period_table(static_cast<int>(cache.size())));
    return cache[k][static_cast<std::size_t>(mod_pow2(t, k))];
}

BigInt LinearFunctionalZd::eval(const ZPoint& p) const {
    if (static_cast<int>(p.size()) != dim)
        throw std::invalid_argument("LinearFunctionalZd: dimension mismatch");
    BigInt acc = 0, coef = 1;
    for (int i = 0; i < dim; ++i) {
        acc += coef * p[i];
        coef *= radix;
    }
    return acc;
}

BigInt LinearFunctionalZd::eval(const Vec2& p) const {
    if (dim != 2) throw std::invalid_argument("LinearFunctionalZd: not 2-dimensional");
    if (!p.is_integral()) throw std::invalid_argument("LinearFunctionalZd: non-integer point");
    return num(p.x) + radix * num(p.y);
}

bool StableWeighting::contains_residue(const BigInt& lvalue) const {
    auto r = static_cast<std::uint32_t>(mod_pow2(lvalue, k));
    return std::binary_search(residues.begin(), residues.end(), r);
}

int StableWeighting::value(const ZPoint& p) const { return contains_residue(functional.eval(p)) ? 1 : 0; }

int StableWeighting::value(const Vec2& p) const { return contains_residue(functional.eval(p)) ? 1 : 0; }

int weight_of_set(const StableWeighting& w, const FiniteSet& a, const ZPoint& p) {
    BigInt shift = w.functional.eval(p);
    int acc = 0;
    for (const auto& x : a) acc ^= f_eval(w.k, w.functional.eval(x) + shift);
    return acc;
}

namespace {

// weight of A + s along the functional, for residue shift s
int shifted_weight(int k, const LinearFunctionalZd& L, const FiniteSet& a, const BigInt& s) {
    int acc = 0;
    for (const auto& x : a) acc ^= f_eval(k, L.eval(x) + s);
    return acc;
}

// The functional is onto Z (first coefficient 1) and f_k has period 2^k,
// so stability is decided by scanning one period of shifts.
bool stable_with_constant(int k, const LinearFunctionalZd& L, const FiniteSet& a, int& constant) {
    constant = shifted_weight(k, L, a, 0);
    BigInt period = BigInt(1) << k;
    for (BigInt s = 1; s < period; ++s)
        if (shifted_weight(k, L, a, s) != constant) return false;
    return true;
}

}  // namespace

bool is_stable(const StableWeighting& w, const FiniteSet& a) {
    int c;
    return stable_with_constant(w.k, w.functional, a, c);
}

bool is_zero_stable(const StableWeighting& w, const FiniteSet& a) {
    int c;
    return stable_with_constant(w.k, w.functional, a, c) && c == 0;
}

WeightingSearchResult find_weighting(const FiniteSetFamily& family) {
    if (family.sets.empty()) throw std::invalid_argument("find_weighting: empty family");
    int dim = -1;
    for (const auto& a : family.sets) {
        if (a.empty()) throw std::invalid_argument("find_weighting: empty set in family");
        for (const auto& p : a) {
            if (dim == -1) dim = static_cast<int>(p.size());
            if (static_cast<int>(p.size()) != dim)
                throw std::invalid_argument("find_weighting: mixed dimensions");
        }
    }

    // radix: 1 + largest bounding-box side, so L is injective on every set
    BigInt side = 0;
    for (const auto& a : family.sets) {
        for (int i = 0; i < dim; ++i) {
            BigInt lo = a[0][i], hi = a[0][i];
            for (const auto& p : a) {
                lo = std::min(lo, p[i]);
                hi = std::max(hi, p[i]);
            }
            side = std::max(side, BigInt(hi - lo));
        }
    }
    LinearFunctionalZd L{dim, side + 1};

    // first non-0-stable level is at most the smallest L-span over the family
    BigInt level_bound = -1;
    for (const auto& a : family.sets) {
        BigInt lo = L.eval(a[0]), hi = lo;
        for (const auto& p : a) {
            BigInt v = L.eval(p);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        BigInt span = hi - lo;
        if (level_bound < 0 || span < level_bound) level_bound = span;
    }

    for (int k = 0; k <= kMaxWeightingLevel; ++k) {
        bool any_active = false;
        std::vector<bool> active;
        for (const auto& a : family.sets) {
            int constant;
            if (!stable_with_constant(k, L, a, constant))
                throw std::logic_error("find_weighting: instability before an active level");
            active.push_back(constant == 1);
            any_active = any_active || constant == 1;
        }
        if (any_active) {
            StableWeighting w{k, L, {}};
            auto table = period_table(k);
            for (std::uint32_t t = 0; t < table.size(); ++t)
                if (table[t]) w.residues.push_back(t);
            return {std::move(w), std::move(active)};
        }
        if (BigInt(k) > level_bound)
            throw std::logic_error("find_weighting: exceeded the guaranteed level bound");
    }
    throw std::runtime_error("find_weighting: level above configured maximum");
}

}  // namespace oddcover
