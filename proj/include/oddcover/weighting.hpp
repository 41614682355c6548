#pragma once

#include "oddcover/geom.hpp"

#include <cstdint>
#include <vector>

namespace oddcover {

// Point of Z^d.
using ZPoint = std::vector<BigInt>;
using FiniteSet = std::vector<ZPoint>;

struct FiniteSetFamily {
    std::vector<FiniteSet> sets;  // nonempty sets, nonempty family
};

inline constexpr int kMaxWeightingLevel = 24;

// The Z2 recursion on Z: f_0 == 1; f_k(0) = 1, f_k(t) = f_k(t-1) ^ f_(k-1)(t-1).
// f_k has period 2^k; the table stores one period.
class ParityFunction1D {
  public:
    explicit ParityFunction1D(int k);

    int level() const { return k_; }
    const std::vector<std::uint8_t>& table() const { return table_; }
    int eval(const BigInt& t) const;

  private:
    int k_;
    std::vector<std::uint8_t> table_;
};

std::vector<std::uint8_t> period_table(int k);
int f_eval(int k, const BigInt& t);

// L(x) = sum r^(i-1) x_i; injective on any set fitting in a box of side < r.
struct LinearFunctionalZd {
    int dim = 2;
    BigInt radix = 1;

    BigInt eval(const ZPoint& p) const;
    BigInt eval(const Vec2& p) const;  // dim == 2, integral p
};

struct StableWeighting {
    int k = 0;
    LinearFunctionalZd functional;
    std::vector<std::uint32_t> residues;  // sorted support of f_k in [0, 2^k)

    bool contains_residue(const BigInt& lvalue) const;
    int value(const ZPoint& p) const;
    int value(const Vec2& p) const;
};

int weight_of_set(const StableWeighting& w, const FiniteSet& a, const ZPoint& p);

bool is_stable(const StableWeighting& w, const FiniteSet& a);
bool is_zero_stable(const StableWeighting& w, const FiniteSet& a);

struct WeightingSearchResult {
    StableWeighting weighting;
    std::vector<bool> active;  // per input set: weight == 1
};

// Minimal k with f_k o L stable but not 0-stable for the family. The radix
// is 1 + the largest bounding-box side over the family's sets.
WeightingSearchResult find_weighting(const FiniteSetFamily& family);

}  // namespace oddcover
