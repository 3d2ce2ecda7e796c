#include "identity_gen.hpp"

#include <utility>

namespace schurid {

namespace {

Partition bracket(int r, int p) {
    return Partition(std::vector<int>(static_cast<std::size_t>(r), p));
}

// [r|p]^k = ((p+1)^k, p^(r-k))
Partition bracket_sup(int r, int p, int k) {
    std::vector<int> parts(static_cast<std::size_t>(k), p + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(r - k), p);
    return Partition(std::move(parts));
}

// [r|p]_k = (p^r, k)
Partition bracket_sub(int r, int p, int k) {
    std::vector<int> parts(static_cast<std::size_t>(r), p);
    parts.push_back(k);
    return Partition(std::move(parts));
}

void enumerate_rec(const Partition& lambda, int n, int max_k, int min_r,
                   std::vector<StripSpec>& cur,
                   std::vector<std::vector<StripSpec>>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_k) return;
    for (int r = min_r; r <= n; ++r) {
        const int gap = lambda.part(static_cast<std::size_t>(r - 1)) -
                        lambda.part(static_cast<std::size_t>(r));
        if (gap < 1) continue;
        for (int m = 1; r + m - 1 <= n; ++m) {
            for (int t = 1; t <= gap; ++t) {
                cur.push_back(StripSpec{r, m, t});
                enumerate_rec(lambda, n, max_k, r + m, cur, out);
                cur.pop_back();
            }
        }
    }
}

} // namespace

Identity main_identity(const Partition& lambda, const std::vector<StripSpec>& specs) {
    validate_strip_specs(lambda, specs);
    const Partition plus = add_strips(lambda, specs);
    const Partition plus_down = peel_complete(plus);
    const Partition down = peel_complete(lambda);

    std::vector<Term> lhs{Term(1, lambda, plus_down)};
    std::vector<Term> rhs{Term(1, plus, down)};
    for (const auto& s : specs) {
        rhs.emplace_back(1, peel_down(plus, s.r), peel_up(lambda, s.r - 1, s.t));
    }
    return Identity(std::move(lhs), std::move(rhs));
}

Identity conjugate_identity(const Identity& id) {
    auto map_side = [](const std::vector<Term>& terms) {
        std::vector<Term> out;
        out.reserve(terms.size());
        for (const auto& t : terms) out.emplace_back(t.coeff, conjugate(t.a), conjugate(t.b));
        return out;
    };
    return Identity(map_side(id.lhs()), map_side(id.rhs()));
}

Identity barred_identity(const Partition& lambda, const std::vector<StripSpec>& specs, Axis axis) {
    if (lambda.empty()) {
        throw schur_error(errc::empty_partition, "barred identity needs a non-empty partition");
    }
    validate_strip_specs(lambda, specs);
    const Partition plus = add_strips(lambda, specs);
    const Partition plus_down = peel_complete(plus);
    const Partition down = peel_complete(lambda);

    auto bar = [axis](const Partition& p) {
        return p.empty() ? p : remove_first(p, axis);
    };

    std::vector<Term> lhs{Term(1, bar(lambda), plus_down)};
    std::vector<Term> rhs{Term(1, bar(plus), down)};
    for (const auto& s : specs) {
        Partition pd = peel_down(plus, s.r);
        Partition up = peel_up(lambda, s.r - 1, s.t);
        if (axis == Axis::row) {
            // the first row sits in the lambda-side determinants
            rhs.emplace_back(1, bar(pd), std::move(up));
        } else {
            // under conjugation the removed column lives in the up-peeled labels
            rhs.emplace_back(1, std::move(pd), bar(up));
        }
    }
    return Identity(std::move(lhs), std::move(rhs));
}

Identity square_identity(const Partition& lambda) {
    const auto corners = inner_corners(lambda);
    std::vector<Term> rhs;
    for (const auto& c : corners) {
        rhs.emplace_back(1, corner_push(lambda, c.index, PushMode::plus_minus),
                         corner_push(lambda, c.index, PushMode::minus_plus));
    }
    return Identity({Term(1, lambda, lambda)}, std::move(rhs));
}

Identity square_identity_via_nu(const Partition& lambda) {
    if (lambda.empty()) {
        throw schur_error(errc::empty_partition, "nu construction needs a non-empty partition");
    }
    const auto runs = distinct_parts(lambda);
    std::vector<int> nu_parts{runs.front().first + 1};
    nu_parts.insert(nu_parts.end(), lambda.parts().begin(), lambda.parts().end());
    const Partition nu(std::move(nu_parts));

    // one strictly vertical strip (t = 1) per run of equal rows,
    // ending at row y_{p-1} + 2
    std::vector<StripSpec> specs;
    int y = 0;
    for (const auto& [xi, mult] : runs) {
        specs.push_back(StripSpec{y + 2, mult, 1});
        y += mult;
    }
    return barred_identity(nu, specs, Axis::row);
}

Identity fulmek_kleber_identity(const Partition& lambda) {
    const int height = static_cast<int>(lambda.height());
    if (height < 2) {
        throw schur_error(errc::height_too_small,
                          "the two-window identity needs height >= 2");
    }
    const int n = height - 1;
    auto slice = [&lambda](int from, int to, int delta) {
        std::vector<int> parts;
        for (int i = from; i <= to; ++i) {
            parts.push_back(lambda.part(static_cast<std::size_t>(i)) + delta);
        }
        return Partition(std::move(parts));
    };
    std::vector<Term> lhs{Term(1, slice(2, n + 1, 0), slice(1, n, 0))};
    std::vector<Term> rhs{
        Term(1, slice(1, n, +1), slice(2, n + 1, -1)),
        Term(1, slice(2, n, 0), lambda),
    };
    return Identity(std::move(lhs), std::move(rhs));
}

Identity fulmek_kleber_identity_derived(const Partition& lambda) {
    const int height = static_cast<int>(lambda.height());
    if (height < 2) {
        throw schur_error(errc::height_too_small,
                          "the two-window identity needs height >= 2");
    }
    const int n = height - 1;
    std::vector<int> hat_parts(lambda.parts());
    hat_parts[0] += 1;
    const Partition hat(std::move(hat_parts));
    const int t = lambda.part(1) - lambda.part(2) + 1;
    return barred_identity(hat, {StripSpec{2, n, t}}, Axis::row);
}

Identity gps_identity(int a, int b, int m, int n) {
    if (a < 1 || a > m || b < 1 || b > n) {
        throw schur_error(errc::invalid_range, "need 1 <= a <= m and 1 <= b <= n");
    }
    std::vector<Term> lhs{Term(1, bracket(a, b), bracket(m, n))};
    std::vector<Term> rhs;
    for (int k = std::max(1, a + b - n); k <= a; ++k) {
        long sign = ((a - k) % 2 == 0) ? 1 : -1;
        rhs.emplace_back(sign, bracket_sub(m, n, a + b - k), bracket_sup(a - 1, b - 1, k - 1));
    }
    for (int k = std::max(1, a + b - m); k <= b; ++k) {
        long sign = ((b - k) % 2 == 0) ? 1 : -1;
        rhs.emplace_back(sign, bracket_sup(m, n, a + b - k), bracket_sub(a - 1, b - 1, k - 1));
    }
    return Identity(std::move(lhs), std::move(rhs));
}

std::vector<std::vector<StripSpec>> enumerate_specs(const Partition& lambda, int max_k) {
    std::vector<std::vector<StripSpec>> out;
    if (max_k < 1) return out;
    std::vector<StripSpec> cur;
    enumerate_rec(lambda, static_cast<int>(lambda.height()), max_k, 2, cur, out);
    return out;
}

} // namespace schurid
