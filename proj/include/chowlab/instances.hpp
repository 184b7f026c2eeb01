#pragma once

#include <cstdint>

#include "chowlab/func.hpp"

namespace chowlab {

// w_i i.i.d. standard normal, theta as given (0 by default)
Ltf random_ltf_gaussian(int n, std::uint64_t seed, double theta = 0.0);

// Positive integer weights with sum exactly total_weight >= n and theta = 0:
// every coordinate starts at 1 and the remaining units land on seeded uniform
// coordinates. total_weight == n is the all-ones majority function.
Ltf random_ltf_integer(int n, long long total_weight, std::uint64_t seed);

// MAJ_n = sign(x_1 + ... + x_n), odd n
Ltf majority(int n);

// Boolean table with round(fraction * 2^n) distinct seeded sign flips
TruthTable flip_fraction(const TruthTable& t, double fraction, std::uint64_t seed);

}  // namespace chowlab
