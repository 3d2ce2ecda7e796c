#include "plucker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <utility>

#include "oracle.hpp"

namespace schurid {

namespace {

void for_each_subset(int p, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> s(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(s);
        int i = k - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == p - (k - 1 - i)) --i;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
}

// Sign and partition of a symbolic determinant given by its leading
// mu-indices; nullopt when two rows coincide (the determinant is zero).
std::optional<std::pair<int, Partition>> normalize_rows(std::vector<int> mu) {
    int sign = 1;
    // insertion sort into strictly decreasing order, tracking swaps
    for (std::size_t i = 1; i < mu.size(); ++i) {
        for (std::size_t j = i; j > 0 && mu[j] > mu[j - 1]; --j) {
            std::swap(mu[j], mu[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        if (mu[i] == mu[i + 1]) return std::nullopt;
    }
    try {
        return std::make_pair(sign, from_mu(MuVector{std::move(mu)}));
    } catch (const schur_error&) {
        return std::nullopt; // negative part: the determinant vanishes
    }
}

} // namespace

PluckerExpansion plucker_expand(const std::vector<std::vector<Rational>>& a,
                                const std::vector<std::vector<Rational>>& b,
                                const ExchangeData& data) {
    const int p = static_cast<int>(a.size());
    auto square = [p](const std::vector<std::vector<Rational>>& m) {
        return std::all_of(m.begin(), m.end(), [p](const auto& row) {
            return static_cast<int>(row.size()) == p;
        });
    };
    if (static_cast<int>(b.size()) != p || !square(a) || !square(b)) {
        throw schur_error(errc::size_mismatch, "matrices must be square and of equal size");
    }
    const int k = static_cast<int>(data.rows.size());
    if (k < 1 || k > p || !std::is_sorted(data.rows.begin(), data.rows.end(), std::less_equal<>()) ||
        data.rows.front() < 1 || data.rows.back() > p) {
        throw schur_error(errc::invalid_range, "exchange rows must be strictly increasing in 1..p");
    }

    PluckerExpansion out;
    out.lhs = det_rational(a) * det_rational(b);
    Rational sum = 0;
    for_each_subset(p, k, [&](const std::vector<int>& s) {
        auto a2 = a;
        auto b2 = b;
        for (int i = 0; i < k; ++i) {
            a2[static_cast<std::size_t>(data.rows[static_cast<std::size_t>(i)] - 1)] =
                b[static_cast<std::size_t>(s[static_cast<std::size_t>(i)] - 1)];
            b2[static_cast<std::size_t>(s[static_cast<std::size_t>(i)] - 1)] =
                a[static_cast<std::size_t>(data.rows[static_cast<std::size_t>(i)] - 1)];
        }
        PluckerTerm term;
        term.exchanged_with = s;
        term.det_a = det_rational(std::move(a2));
        term.det_b = det_rational(std::move(b2));
        sum += term.det_a * term.det_b;
        out.terms.push_back(std::move(term));
    });
    out.holds = (sum == out.lhs);
    return out;
}

Identity derive_main_identity(const Partition& lambda, const std::vector<StripSpec>& specs,
                              int big_n) {
    validate_strip_specs(lambda, specs);
    if (big_n < static_cast<int>(lambda.height()) + 1) {
        throw schur_error(errc::n_too_small, "need N >= height(lambda) + 1");
    }
    const Partition plus = add_strips(lambda, specs);
    const Partition plus_down = peel_complete(plus);
    const std::vector<int> rows_i = to_mu(lambda, big_n).entries;
    const std::vector<int> rows_ii = to_mu(plus_down, big_n).entries;

    std::vector<int> exchange;
    for (const auto& s : specs) exchange.push_back(s.r + s.m - 1);

    const int k = static_cast<int>(exchange.size());
    std::vector<Term> rhs;
    for_each_subset(big_n, k, [&](const std::vector<int>& s) {
        auto i2 = rows_i;
        auto ii2 = rows_ii;
        for (int i = 0; i < k; ++i) {
            i2[static_cast<std::size_t>(exchange[static_cast<std::size_t>(i)] - 1)] =
                rows_ii[static_cast<std::size_t>(s[static_cast<std::size_t>(i)] - 1)];
            ii2[static_cast<std::size_t>(s[static_cast<std::size_t>(i)] - 1)] =
                rows_i[static_cast<std::size_t>(exchange[static_cast<std::size_t>(i)] - 1)];
        }
        auto na = normalize_rows(std::move(i2));
        if (!na) return;
        auto nb = normalize_rows(std::move(ii2));
        if (!nb) return;
        rhs.emplace_back(static_cast<long>(na->first) * nb->first,
                         std::move(na->second), std::move(nb->second));
    });
    return Identity({Term(1, lambda, plus_down)}, std::move(rhs));
}

SelfTestReport plucker_selftest(int max_size, int trials, std::uint64_t seed) {
    if (max_size < 2 || trials < 1) {
        throw schur_error(errc::invalid_range, "need max_size >= 2 and trials >= 1");
    }
    std::mt19937_64 gen(seed);
    auto entry = [&gen]() {
        return Rational(static_cast<int>(gen() % 19) - 9);
    };
    SelfTestReport report;
    for (int t = 0; t < trials; ++t) {
        const int p = 2 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_size - 1));
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(p),
                                             std::vector<Rational>(static_cast<std::size_t>(p)));
        auto b = a;
        for (auto& row : a) for (auto& x : row) x = entry();
        for (auto& row : b) for (auto& x : row) x = entry();
        ++report.trials;
        bool ok = true;
        for (int k = 1; k <= p && ok; ++k) {
            for_each_subset(p, k, [&](const std::vector<int>& rset) {
                if (!ok) return;
                if (!plucker_expand(a, b, ExchangeData{rset}).holds) ok = false;
            });
        }
        if (!ok) ++report.failures;
    }
    return report;
}

} // namespace schurid
