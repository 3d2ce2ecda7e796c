#pragma once

#include <string>
#include <vector>

#include "partition.hpp"

namespace schurid {

/// coeff * s_a * s_b with factors kept in canonical order (parts
/// lexicographically descending); s_empty stays explicit.
struct Term {
    long coeff = 1;
    Partition a;
    Partition b;

    Term() = default;
    Term(long c, Partition x, Partition y);

    bool same_factors(const Term& o) const { return a == o.a && b == o.b; }
};

/// A formal bilinear equation between two sums of Schur-label products,
/// stored in canonical form: factors ordered, terms sorted, like terms
/// merged.  Homogeneity (|a|+|b| constant over all terms) is asserted at
/// construction.
class Identity {
public:
    Identity(std::vector<Term> lhs, std::vector<Term> rhs);

    const std::vector<Term>& lhs() const noexcept { return lhs_; }
    const std::vector<Term>& rhs() const noexcept { return rhs_; }

    /// Common homogeneity degree |a|+|b|; -1 for an identity with no terms.
    long degree() const noexcept { return degree_; }

    bool operator==(const Identity& o) const {
        return lhs_ == o.lhs_ && rhs_ == o.rhs_;
    }

    std::string to_json() const;
    std::string to_latex() const;
    static Identity from_json(const std::string& text);

private:
    std::vector<Term> lhs_;
    std::vector<Term> rhs_;
    long degree_ = -1;
};

bool operator==(const Term& x, const Term& y);

} // namespace schurid
