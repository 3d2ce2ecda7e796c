#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace schurid {

namespace {

BigInt det_bareiss(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rational pow_rational(const Rational& base, int exp) {
    Rational r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Recursive SSYT filling: rows filled top to bottom, each row left to right,
// weakly increasing along rows and strictly increasing down columns.
void fill_ssyt(const Partition& shape, int m, std::size_t row, int col,
               std::vector<std::vector<int>>& tab, std::vector<int>& content,
               MonomialMap& out) {
    if (row == shape.height()) {
        ++out[content];
        return;
    }
    const int row_len = shape.parts()[row];
    if (col == row_len) {
        fill_ssyt(shape, m, row + 1, 0, tab, content, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[row][static_cast<std::size_t>(col) - 1]);
    if (row > 0 && col < shape.parts()[row - 1]) {
        lo = std::max(lo, tab[row - 1][static_cast<std::size_t>(col)] + 1);
    }
    for (int v = lo; v <= m; ++v) {
        tab[row][static_cast<std::size_t>(col)] = v;
        ++content[static_cast<std::size_t>(v) - 1];
        fill_ssyt(shape, m, row, col + 1, tab, content, out);
        --content[static_cast<std::size_t>(v) - 1];
    }
}

} // namespace

Rational det_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (const auto& x : a[i]) l = lcm(l, denominator(x));
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = numerator(a[i][j]) * (l / denominator(a[i][j]));
        }
        scale *= l;
    }
    return Rational(det_bareiss(std::move(m)), scale);
}

std::vector<Rational> symmetric_basis_values(BasisKind kind, const EvalPoint& point, int max_k) {
    std::vector<Rational> vals(static_cast<std::size_t>(max_k) + 1, Rational(0));
    vals[0] = 1;
    for (const Rational& t : point.coords) {
        if (kind == BasisKind::h) {
            for (int k = 1; k <= max_k; ++k) {
                vals[static_cast<std::size_t>(k)] += t * vals[static_cast<std::size_t>(k) - 1];
            }
        } else {
            for (int k = max_k; k >= 1; --k) {
                vals[static_cast<std::size_t>(k)] += t * vals[static_cast<std::size_t>(k) - 1];
            }
        }
    }
    return vals;
}

Rational schur_eval_bialternant(const Partition& lambda, const EvalPoint& point) {
    const int m = static_cast<int>(point.vars());
    if (static_cast<int>(lambda.height()) > m) {
        throw schur_error(errc::height_exceeds_variables,
                          "bialternant needs at least height(lambda) variables");
    }
    for (std::size_t i = 0; i < point.coords.size(); ++i) {
        for (std::size_t j = i + 1; j < point.coords.size(); ++j) {
            if (point.coords[i] == point.coords[j]) {
                throw schur_error(errc::repeated_coordinates,
                                  "bialternant needs pairwise distinct coordinates");
            }
        }
    }
    auto power_matrix = [&](bool with_lambda) {
        std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(m),
                                               std::vector<Rational>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                int exp = m - j - 1;
                if (with_lambda) exp += lambda.part(static_cast<std::size_t>(j) + 1);
                mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    pow_rational(point.coords[static_cast<std::size_t>(i)], exp);
            }
        }
        return mat;
    };
    return det_rational(power_matrix(true)) / det_rational(power_matrix(false));
}

Rational jt_determinant(BasisKind kind, const Partition& rows, const EvalPoint& point, int size) {
    const int max_index = rows.part(1) + size;
    auto basis = symmetric_basis_values(kind, point, std::max(max_index, 0));
    std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(size),
                                           std::vector<Rational>(static_cast<std::size_t>(size)));
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= size; ++j) {
            int idx = rows.part(static_cast<std::size_t>(i)) - i + j;
            mat[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1] =
                (idx < 0) ? Rational(0) : basis[static_cast<std::size_t>(idx)];
        }
    }
    return det_rational(std::move(mat));
}

Rational schur_eval_jacobi_trudi(const Partition& lambda, const EvalPoint& point,
                                 BasisKind kind, int size) {
    if (kind == BasisKind::h) {
        if (size < static_cast<int>(lambda.height())) {
            throw schur_error(errc::size_too_small, "h-basis determinant needs size >= height");
        }
        return jt_determinant(BasisKind::h, lambda, point, size);
    }
    if (size < lambda.part(1)) {
        throw schur_error(errc::size_too_small, "e-basis determinant needs size >= lambda_1");
    }
    return jt_determinant(BasisKind::e, conjugate(lambda), point, size);
}

MonomialMap schur_expand_ssyt(const Partition& lambda, int m) {
    if (lambda.weight() > 12 || m > 8 || m < 1) {
        throw schur_error(errc::too_large, "SSYT enumeration guarded to |lambda| <= 12, m <= 8");
    }
    MonomialMap out;
    if (static_cast<int>(lambda.height()) > m) return out;
    if (lambda.empty()) {
        out[std::vector<int>(static_cast<std::size_t>(m), 0)] = 1;
        return out;
    }
    std::vector<std::vector<int>> tab;
    for (int p : lambda.parts()) tab.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<int> content(static_cast<std::size_t>(m), 0);
    fill_ssyt(lambda, m, 0, 0, tab, content, out);
    return out;
}

int default_verify_vars(const Identity& id) {
    std::size_t h = 0;
    for (const auto* side : {&id.lhs(), &id.rhs()}) {
        for (const auto& t : *side) {
            h = std::max({h, t.a.height(), t.b.height()});
        }
    }
    return static_cast<int>(h) + 1;
}

VerifyReport verify_identity(const Identity& id, int m, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw schur_error(errc::invalid_range, "trials must be >= 1");
    }
    if (m < default_verify_vars(id) - 1) {
        throw schur_error(errc::variable_count_too_small,
                          "variable count below the max height in the identity");
    }
    std::vector<EvalPoint> points;
    {
        EvalPoint det_point;
        for (int i = 1; i <= m; ++i) det_point.coords.emplace_back(i);
        points.push_back(std::move(det_point));
    }
    std::mt19937_64 gen(seed);
    for (int t = 0; t < trials; ++t) {
        // distinct integers in [1, 50], explicit Fisher-Yates so the draw
        // depends only on the seed
        std::vector<int> pool(50);
        for (int i = 0; i < 50; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        EvalPoint pt;
        for (int i = 0; i < m; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(gen() % static_cast<std::uint64_t>(50 - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            pt.coords.emplace_back(pool[static_cast<std::size_t>(i)]);
        }
        points.push_back(std::move(pt));
    }

    VerifyReport report;
    for (const auto& pt : points) {
        auto side_value = [&](const std::vector<Term>& terms) {
            Rational sum = 0;
            for (const auto& t : terms) {
                Rational va = schur_eval_jacobi_trudi(t.a, pt, BasisKind::h,
                                                      static_cast<int>(t.a.height()));
                Rational vb = schur_eval_jacobi_trudi(t.b, pt, BasisKind::h,
                                                      static_cast<int>(t.b.height()));
                sum += Rational(t.coeff) * va * vb;
            }
            return sum;
        };
        ++report.points_checked;
        if (side_value(id.lhs()) != side_value(id.rhs())) {
            report.verified = false;
            report.counterexample = pt.coords;
            return report;
        }
    }
    report.verified = true;
    return report;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["verified"] = verified;
    j["points_checked"] = points_checked;
    if (counterexample) {
        auto arr = nlohmann::json::array();
        for (const auto& c : *counterexample) {
            std::ostringstream os;
            os << c;
            arr.push_back(os.str());
        }
        j["counterexample"] = arr;
    } else {
        j["counterexample"] = nullptr;
    }
    return j.dump();
}

} // namespace schurid
