#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "cycoh/integer.hpp"

namespace cycoh {

/// Finitely generated abelian group in canonical form
///   Z^r + Z/d1 + ... + Z/dk   with  2 <= d1 | d2 | ... | dk.
/// The representation is unique, so isomorphism is field-wise equality.
class FinAbGroup {
public:
    /// The trivial group.
    FinAbGroup() = default;

    /// Canonical form of Z^free_rank + sum of Z/t over the given torsion
    /// coefficients. Coefficients may arrive in any order; 0 contributes a Z
    /// factor, +-1 contributes nothing, signs are ignored.
    FinAbGroup(std::int64_t free_rank, std::vector<Int> torsion);
    FinAbGroup(std::int64_t free_rank, std::initializer_list<long long> torsion);

    static FinAbGroup free_group(std::int64_t rank);
    /// Z/d, with the degenerate readings cyclic(0) = Z and cyclic(1) = 0.
    static FinAbGroup cyclic(const Int& d);

    std::int64_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    /// Number of elements; throws Error when the group is infinite.
    Int order() const;
    /// Number of solutions of k*x = 0, i.e. |G[k]|; requires k >= 1.
    /// A complete isomorphism invariant as k runs over multiples of the
    /// exponent's divisors, which the tests exploit.
    Int torsion_count(const Int& k) const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
    std::int64_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);
/// k-fold direct sum of a with itself, k >= 0.
FinAbGroup direct_sum_power(const FinAbGroup& a, std::int64_t k);
FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup tor(const FinAbGroup& a, const FinAbGroup& b);
FinAbGroup tensor_with_cyclic(const FinAbGroup& a, const Int& m);

/// Renders "0", "Z", "Z^2 + Z/2 + Z/6"; runs of equal cyclic factors
/// collapse to "(Z/2)^6". group_from_string accepts exactly this grammar
/// (whitespace-insensitive, terms in any order) and re-canonicalizes.
std::string to_string(const FinAbGroup& g);
FinAbGroup group_from_string(const std::string& text);

inline std::ostream& operator<<(std::ostream& os, const FinAbGroup& g) {
    return os << to_string(g);
}

}  // namespace cycoh
