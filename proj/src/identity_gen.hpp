#pragma once

#include <vector>

#include "identity.hpp"
#include "strip_ops.hpp"

namespace schurid {

/// s_lambda s_{lambda+v} = s_{lambda+} s_{lambdav} + sum_p s_{lambda+ down(r_p)} s_{lambda up(r_p-1,t_p)}
Identity main_identity(const Partition& lambda, const std::vector<StripSpec>& specs);

/// Simultaneous transposition of every Young-diagram label.
Identity conjugate_identity(const Identity& id);

/// First-row or first-column removal variant.  Row removal bars the
/// lambda, lambda+ and lambda+ down(r_p) labels; column removal (the
/// conjugate mechanism) bars lambda, lambda+ and the up-peeled labels.
Identity barred_identity(const Partition& lambda, const std::vector<StripSpec>& specs, Axis axis);

/// s_lambda^2 as the sum over inner corners of s_{corner push +-} s_{corner push -+}.
Identity square_identity(const Partition& lambda);

/// The same identity built through the auxiliary partition
/// nu = (xi_1+1, lambda) with all strictly vertical strips added.
Identity square_identity_via_nu(const Partition& lambda);

/// The two-row-window identity on (lambda_1..lambda_{n+1}).
Identity fulmek_kleber_identity(const Partition& lambda);

/// Derivation path for the above: main identity on (lambda_1+1, lambda_2, ...)
/// with the single strip (r=2, m=n, t=lambda_1-lambda_2+1), first row removed.
Identity fulmek_kleber_identity_derived(const Partition& lambda);

/// Alternating rectangle-family identity on s_[a|b] s_[m|n].
Identity gps_identity(int a, int b, int m, int n);

/// All valid spec lists with 1 <= k <= max_k, in lexicographic order.
std::vector<std::vector<StripSpec>> enumerate_specs(const Partition& lambda, int max_k);

} // namespace schurid
