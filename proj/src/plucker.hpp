#pragma once

#include <cstdint>
#include <vector>

#include "identity.hpp"
#include "rational.hpp"
#include "strip_ops.hpp"

namespace schurid {

/// Row-exchange data {k | r_1 < ... < r_k}, 1-based positions.
struct ExchangeData {
    std::vector<int> rows;
};

struct PluckerTerm {
    std::vector<int> exchanged_with; // the s-set, increasing
    Rational det_a;
    Rational det_b;
};

struct PluckerExpansion {
    Rational lhs;                // |A| |B|
    std::vector<PluckerTerm> terms;
    bool holds = false;          // lhs == sum of det_a * det_b
};

/// Expands |A||B| over all exchanges of the fixed row set of A with
/// k-subsets of rows of B, and checks the relation exactly.
PluckerExpansion plucker_expand(const std::vector<std::vector<Rational>>& a,
                                const std::vector<std::vector<Rational>>& b,
                                const ExchangeData& data);

/// Re-derives the bilinear strip identity at the determinant level:
/// symbolic Jacobi-Trudi rows tagged by their leading index, exchange
/// data {k | r_1+m_1-1, ...}, repeated-row terms dropped, row order
/// normalized with sign tracking, surviving determinants mapped back to
/// partitions.  Requires big_n >= height(lambda) + 1.
Identity derive_main_identity(const Partition& lambda, const std::vector<StripSpec>& specs,
                              int big_n);

struct SelfTestReport {
    int trials = 0;
    int failures = 0;
};

/// Seeded random matrix pairs with entries in [-9, 9] over all valid
/// exchange data, sizes 2..max_size.
SelfTestReport plucker_selftest(int max_size, int trials, std::uint64_t seed);

} // namespace schurid
