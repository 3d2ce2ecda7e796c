#include "strip_ops.hpp"

#include <sstream>
#include <utility>

namespace schurid {

namespace {

// Rebuilds a partition from a run list whose values are strictly decreasing
// up to adjacent collisions; drops empty runs and zero-valued runs.
Partition runs_to_partition(std::vector<std::pair<int, int>> runs) {
    std::vector<std::pair<int, int>> merged;
    for (auto& [val, mult] : runs) {
        if (mult <= 0 || val <= 0) continue;
        if (!merged.empty() && merged.back().first == val) {
            merged.back().second += mult;
        } else {
            merged.emplace_back(val, mult);
        }
    }
    std::vector<int> parts;
    for (const auto& [val, mult] : merged) {
        parts.insert(parts.end(), static_cast<std::size_t>(mult), val);
    }
    return Partition(std::move(parts));
}

[[noreturn]] void bad_spec(const std::string& msg) {
    throw schur_error(errc::invalid_strip_spec, msg);
}

} // namespace

void validate_strip_specs(const Partition& lambda, const std::vector<StripSpec>& specs) {
    const int n = static_cast<int>(lambda.height());
    if (specs.empty()) bad_spec("at least one strip spec is required (k >= 1)");
    const std::size_t k = specs.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& s = specs[i];
        std::ostringstream os;
        if (i == 0 && s.r < 2) {
            os << "r_1 >= 2 violated (got r_1 = " << s.r << ")";
            bad_spec(os.str());
        }
        if (i > 0 && specs[i - 1].r >= s.r) {
            os << "r_" << i << " < r_" << (i + 1) << " violated (" << specs[i - 1].r
               << " !< " << s.r << ")";
            bad_spec(os.str());
        }
        if (s.m < 1) {
            os << "m_" << (i + 1) << " >= 1 violated (got " << s.m << ")";
            bad_spec(os.str());
        }
        if (i + 1 < k && s.m > specs[i + 1].r - s.r) {
            os << "m_" << (i + 1) << " <= r_" << (i + 2) << " - r_" << (i + 1)
               << " violated (" << s.m << " > " << (specs[i + 1].r - s.r) << ")";
            bad_spec(os.str());
        }
        if (i + 1 == k && s.r + s.m - 1 > n) {
            os << "r_k + m_k - 1 <= n violated (" << (s.r + s.m - 1) << " > " << n << ")";
            bad_spec(os.str());
        }
        const int gap = lambda.part(static_cast<std::size_t>(s.r - 1)) -
                        lambda.part(static_cast<std::size_t>(s.r));
        if (s.t < 1) {
            os << "t_" << (i + 1) << " >= 1 violated (got " << s.t << ")";
            bad_spec(os.str());
        }
        if (s.t > gap) {
            os << "t_" << (i + 1) << " <= lambda_" << (s.r - 1) << " - lambda_" << s.r
               << " violated (" << s.t << " > " << gap << ")";
            bad_spec(os.str());
        }
    }
}

Partition peel_complete(const Partition& lambda) {
    std::vector<int> out;
    for (std::size_t i = 2; i <= lambda.height(); ++i) {
        out.push_back(lambda.part(i) - 1);
    }
    return Partition(std::move(out));
}

Partition peel_down(const Partition& lambda, int r) {
    const int n = static_cast<int>(lambda.height());
    if (r < 1 || r > n) {
        throw schur_error(errc::row_out_of_range, "peel_down row out of range");
    }
    std::vector<int> out;
    for (int i = 1; i < r; ++i) out.push_back(lambda.part(static_cast<std::size_t>(i)));
    for (int i = r + 1; i <= n; ++i) out.push_back(lambda.part(static_cast<std::size_t>(i)) - 1);
    return Partition(std::move(out));
}

Partition peel_up(const Partition& lambda, int r, int s) {
    const int n = static_cast<int>(lambda.height());
    if (r < 1 || r > n) {
        throw schur_error(errc::invalid_start_box, "peel_up row out of range");
    }
    const int lr = lambda.part(static_cast<std::size_t>(r));
    const int lr1 = lambda.part(static_cast<std::size_t>(r + 1));
    // in row 1 the start box may sit one past the strip segment, in which
    // case nothing is removed and the result is lambda itself
    const int max_s = (r == 1) ? lr - lr1 + 1 : lr - lr1;
    if (lr <= lr1 || s < 1 || s > max_s) {
        throw schur_error(errc::invalid_start_box,
                          "peel_up start box has a box directly under it");
    }
    std::vector<int> out;
    for (int i = 2; i <= r; ++i) out.push_back(lambda.part(static_cast<std::size_t>(i)) - 1);
    out.push_back(lr1 + s - 1);
    for (int i = r + 1; i <= n; ++i) out.push_back(lambda.part(static_cast<std::size_t>(i)));
    return Partition(std::move(out));
}

Partition add_strips(const Partition& lambda, const std::vector<StripSpec>& specs) {
    validate_strip_specs(lambda, specs);
    std::vector<int> out(lambda.parts());
    for (const auto& spec : specs) {
        // rows r..r+m-1; the end row gains t boxes, row r+j becomes
        // lambda_{r+j-1}+1 and the old lambda_{r+m-1} drops out
        out[static_cast<std::size_t>(spec.r - 1)] =
            lambda.part(static_cast<std::size_t>(spec.r)) + spec.t;
        for (int j = 1; j < spec.m; ++j) {
            out[static_cast<std::size_t>(spec.r + j - 1)] =
                lambda.part(static_cast<std::size_t>(spec.r + j - 1)) + 1;
        }
    }
    return Partition(std::move(out));
}

Partition corner_shift(const Partition& lambda, int i, ShiftDir dir) {
    auto runs = distinct_parts(lambda);
    const int k = static_cast<int>(runs.size());
    if (i < 1 || i > k + 1) {
        throw schur_error(errc::shift_undefined, "corner index out of range");
    }
    switch (dir) {
        case ShiftDir::h_plus:
            if (i > k) {
                throw schur_error(errc::shift_undefined,
                                  "horizontal shift of the corner on the y axis is undefined");
            }
            if (i < 2) {
                throw schur_error(errc::shift_undefined,
                                  "h+ of the top corner has no bounding corner above");
            }
            runs[static_cast<std::size_t>(i - 1)].first += 1;
            break;
        case ShiftDir::h_minus:
            if (i > k) {
                throw schur_error(errc::shift_undefined,
                                  "horizontal shift of the corner on the y axis is undefined");
            }
            runs[static_cast<std::size_t>(i - 1)].first -= 1;
            break;
        case ShiftDir::v_plus:
        case ShiftDir::v_minus: {
            if (i < 2) {
                throw schur_error(errc::shift_undefined,
                                  "vertical shift of the corner on the x axis is undefined");
            }
            const int d = (dir == ShiftDir::v_plus) ? +1 : -1;
            runs[static_cast<std::size_t>(i - 2)].second += d;
            if (i <= k) runs[static_cast<std::size_t>(i - 1)].second -= d;
            break;
        }
    }
    return runs_to_partition(std::move(runs));
}

Partition corner_push(const Partition& lambda, int i, PushMode mode) {
    auto runs = distinct_parts(lambda);
    const int k = static_cast<int>(runs.size());
    if (i < 1 || i > k + 1) {
        throw schur_error(errc::row_out_of_range, "corner index out of range");
    }
    const int dh = (mode == PushMode::plus_minus) ? +1 : -1;
    for (int j = 1; j < i; ++j) runs[static_cast<std::size_t>(j - 1)].first += dh;
    // the vertical shifts of all corners below alpha_i telescope to a single
    // change of the multiplicity at alpha_i
    if (i <= k) runs[static_cast<std::size_t>(i - 1)].second -= dh;
    return runs_to_partition(std::move(runs));
}

Partition remove_first(const Partition& lambda, Axis axis) {
    if (lambda.empty()) {
        throw schur_error(errc::empty_partition, "cannot remove a row/column of the empty partition");
    }
    std::vector<int> out;
    if (axis == Axis::row) {
        out.assign(lambda.parts().begin() + 1, lambda.parts().end());
    } else {
        for (int p : lambda.parts()) out.push_back(p - 1);
    }
    return Partition(std::move(out));
}

} // namespace schurid
