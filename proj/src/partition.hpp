#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace schurid {

/// A partition in canonical form: weakly decreasing positive parts,
/// trailing zeros stripped.  The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes a raw list of non-negative integers.
    /// Throws NotWeaklyDecreasing if the nonzero prefix is not sorted.
    explicit Partition(std::vector<int> raw);

    const std::vector<int>& parts() const noexcept { return parts_; }

    std::size_t height() const noexcept { return parts_.size(); }
    long weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    /// parts()[i-1] for 1 <= i, zero beyond the height.
    int part(std::size_t i) const noexcept {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// mu = lambda - delta^(N): strictly decreasing vector of N integers.
struct MuVector {
    std::vector<int> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

/// One inward corner of a Young diagram, in the (x, y) frame where
/// x counts columns and y counts rows downward.
struct InnerCorner {
    int x = 0;
    int y = 0;
    int index = 1; // 1-based position in the corner list

    bool operator==(const InnerCorner&) const = default;
};

Partition conjugate(const Partition& lambda);

MuVector to_mu(const Partition& lambda, int n);
Partition from_mu(const MuVector& mu);

/// Run-length decomposition (xi_i, m_i) with xi_1 > ... > xi_k > 0.
std::vector<std::pair<int, int>> distinct_parts(const Partition& lambda);

/// The k+1 corners (xi_i, y_{i-1}), including (xi_1, 0) and (0, height).
/// The empty diagram yields the single degenerate corner (0, 0).
std::vector<InnerCorner> inner_corners(const Partition& lambda);

/// Rebuilds a partition from a corner list with strictly decreasing x and
/// strictly increasing y; the last corner must have x = 0.
Partition partition_from_corners(const std::vector<InnerCorner>& corners);

/// Total order used for canonical identity forms: weight descending,
/// then parts lexicographically ascending.
bool canonical_less(const Partition& a, const Partition& b);

} // namespace schurid
