#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "identity.hpp"
#include "partition.hpp"
#include "rational.hpp"

namespace schurid {

/// Exact evaluation point t_1..t_m.
struct EvalPoint {
    std::vector<Rational> coords;

    std::size_t vars() const noexcept { return coords.size(); }
};

enum class BasisKind { h, e };

/// Exponent vector -> SSYT count.
using MonomialMap = std::map<std::vector<int>, long>;

struct VerifyReport {
    bool verified = false;
    int points_checked = 0;
    std::optional<std::vector<Rational>> counterexample;

    std::string to_json() const;
};

/// Exact determinant of a rational matrix (Bareiss on the cleared
/// integer matrix).  Empty matrix gives 1.
Rational det_rational(std::vector<std::vector<Rational>> a);

/// Values of h_0..h_max or e_0..e_max at the point.
std::vector<Rational> symmetric_basis_values(BasisKind kind, const EvalPoint& point, int max_k);

/// Ratio-of-determinants value; requires pairwise distinct coordinates
/// and height(lambda) <= vars.
Rational schur_eval_bialternant(const Partition& lambda, const EvalPoint& point);

/// det || b_{p_i - i + j} || over the given basis at the point, size x size.
Rational jt_determinant(BasisKind kind, const Partition& rows, const EvalPoint& point, int size);

/// Jacobi-Trudi value; kind h needs size >= height(lambda), kind e needs
/// size >= lambda_1.  Works at repeated coordinates.
Rational schur_eval_jacobi_trudi(const Partition& lambda, const EvalPoint& point,
                                 BasisKind kind, int size);

/// Brute-force semistandard-tableau expansion in m variables.
/// Guarded to |lambda| <= 12, m <= 8.
MonomialMap schur_expand_ssyt(const Partition& lambda, int m);

/// Evaluates both sides exactly at the deterministic point (1,2,...,m)
/// and at `trials` seeded pseudo-random distinct-integer points.
VerifyReport verify_identity(const Identity& id, int m, int trials, std::uint64_t seed);

/// Default variable count for verification: 1 + max height in the identity.
int default_verify_vars(const Identity& id);

} // namespace schurid
