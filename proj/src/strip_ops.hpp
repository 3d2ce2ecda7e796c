#pragma once

#include <vector>

#include "partition.hpp"

namespace schurid {

/// One border-strip addition: t boxes in the end row r, spanning m rows
/// r..r+m-1 (the strip begins in its bottom row and ends in row r).
struct StripSpec {
    int r = 0;
    int m = 0;
    int t = 0;

    bool operator==(const StripSpec&) const = default;
};

enum class Axis { row, column };
enum class ShiftDir { h_plus, h_minus, v_plus, v_minus };
enum class PushMode { plus_minus, minus_plus };

/// Throws InvalidStripSpec naming the first violated inequality.
/// Constraints against a host of height n (r_{k+1} is the row after the
/// last strip): 2 <= r_1 < ... < r_k, m_i >= 1, m_i <= r_{i+1} - r_i for
/// i < k, r_k + m_k - 1 <= n, and 1 <= t_i <= lambda_{r_i-1} - lambda_{r_i}.
void validate_strip_specs(const Partition& lambda, const std::vector<StripSpec>& specs);

/// Removal of the complete border strip; equals dropping the first row
/// and the first column.
Partition peel_complete(const Partition& lambda);

/// Partial down-peeling from the right-most strip box of row r.
Partition peel_down(const Partition& lambda, int r);

/// Partial up-peeling from box (r, s) of the complete border strip.
/// Requires lambda_r > lambda_{r+1} and 1 <= s <= lambda_r - lambda_{r+1}
/// (no box of the diagram directly under the start box); in row 1 the
/// degenerate s = lambda_1 - lambda_2 + 1 is also allowed and removes
/// nothing.
Partition peel_up(const Partition& lambda, int r, int s);

Partition add_strips(const Partition& lambda, const std::vector<StripSpec>& specs);

/// Shift of the i-th inner corner by one box; merging of equal rows and
/// vanishing of empty rows happens as dictated by the diagram.
Partition corner_shift(const Partition& lambda, int i, ShiftDir dir);

/// Definition of the corner push: all corners above alpha_i shifted
/// horizontally, all corners below shifted vertically, alpha_i fixed.
Partition corner_push(const Partition& lambda, int i, PushMode mode);

Partition remove_first(const Partition& lambda, Axis axis);

} // namespace schurid
