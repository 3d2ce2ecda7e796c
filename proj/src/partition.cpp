#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schurid {

Partition::Partition(std::vector<int> raw) {
    while (!raw.empty() && raw.back() == 0) raw.pop_back();
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] <= 0) {
            throw schur_error(errc::not_weakly_decreasing,
                              "partition has a zero or negative part before a positive one");
        }
        if (i + 1 < raw.size() && raw[i] < raw[i + 1]) {
            throw schur_error(errc::not_weakly_decreasing,
                              "partition parts must be weakly decreasing");
        }
    }
    parts_ = std::move(raw);
}

long Partition::weight() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(lambda.parts()[0]));
    for (std::size_t i = 0; i < out.size(); ++i) {
        int col = static_cast<int>(i) + 1;
        out[i] = static_cast<int>(std::count_if(
            lambda.parts().begin(), lambda.parts().end(),
            [col](int p) { return p >= col; }));
    }
    return Partition(std::move(out));
}

MuVector to_mu(const Partition& lambda, int n) {
    if (n < static_cast<int>(lambda.height())) {
        throw schur_error(errc::n_too_small, "N must be at least the height of the partition");
    }
    MuVector mu;
    mu.entries.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        mu.entries.push_back(lambda.part(static_cast<std::size_t>(i)) - i + 1);
    }
    return mu;
}

Partition from_mu(const MuVector& mu) {
    std::vector<int> parts;
    parts.reserve(mu.entries.size());
    for (std::size_t i = 0; i < mu.entries.size(); ++i) {
        if (i + 1 < mu.entries.size() && mu.entries[i] <= mu.entries[i + 1]) {
            throw schur_error(errc::not_strictly_decreasing,
                              "mu entries must be strictly decreasing");
        }
        int part = mu.entries[i] + static_cast<int>(i);
        if (part < 0) {
            throw schur_error(errc::negative_part, "mu vector maps to a negative part");
        }
        parts.push_back(part);
    }
    return Partition(std::move(parts));
}

std::vector<std::pair<int, int>> distinct_parts(const Partition& lambda) {
    std::vector<std::pair<int, int>> runs;
    for (int p : lambda.parts()) {
        if (!runs.empty() && runs.back().first == p) {
            ++runs.back().second;
        } else {
            runs.emplace_back(p, 1);
        }
    }
    return runs;
}

std::vector<InnerCorner> inner_corners(const Partition& lambda) {
    if (lambda.empty()) return {InnerCorner{0, 0, 1}};
    auto runs = distinct_parts(lambda);
    std::vector<InnerCorner> corners;
    int y = 0;
    int idx = 1;
    for (const auto& [xi, mult] : runs) {
        corners.push_back(InnerCorner{xi, y, idx++});
        y += mult;
    }
    corners.push_back(InnerCorner{0, y, idx});
    return corners;
}

Partition partition_from_corners(const std::vector<InnerCorner>& corners) {
    if (corners.empty() || corners.back().x != 0) {
        throw schur_error(errc::internal, "corner list must end at the y axis");
    }
    std::vector<int> parts;
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
        const auto& c = corners[i];
        const auto& next = corners[i + 1];
        if (c.x <= next.x || c.y >= next.y) {
            throw schur_error(errc::internal, "corner coordinates are not monotone");
        }
        for (int row = c.y; row < next.y; ++row) parts.push_back(c.x);
    }
    return Partition(std::move(parts));
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() > b.weight();
    return a.parts() < b.parts();
}

} // namespace schurid
