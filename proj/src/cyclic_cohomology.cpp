#include "cycoh/cyclic_cohomology.hpp"

#include <vector>

namespace cycoh {

namespace {

std::int64_t order_as_int(const Int& m) {
    if (m.sign() <= 0) throw InvalidInputError("GModule: group order must be >= 1");
    return to_int64(m);
}

}  // namespace

void validate(const GModule& a) {
    const std::int64_t m = order_as_int(a.m);
    if (a.action.rows() != a.action.cols())
        throw InvalidInputError("GModule: action matrix not square");
    if (!is_identity(matrix_power(a.action, m)))
        throw InvalidInputError("GModule: action matrix does not satisfy T^m = I");
}

GModule trivial_module(const Int& m, Index rank) {
    order_as_int(m);
    if (rank < 0) throw InvalidInputError("trivial_module: negative rank");
    return GModule{m, IntMatrix::Identity(rank, rank)};
}

GModule induced_module(const Int& m, const Int& index) {
    order_as_int(m);
    if (index.sign() <= 0 || !divides(index, m))
        throw InvalidIndexError("induced_module: index must divide the group order");
    const Index k = to_int64(index);
    IntMatrix shift = IntMatrix::Zero(k, k);
    for (Index i = 0; i < k; ++i) shift((i + 1) % k, i) = 1;
    return GModule{m, std::move(shift)};
}

GModule character_eps(const Int& m) {
    order_as_int(m);
    if (!(m % Int(2)).is_zero())
        throw InvalidOrderError("character_eps: group order must be even");
    return GModule{m, make_matrix({{-1}})};
}

namespace {

// Ascending-coefficient monic polynomials over Z; enough arithmetic to divide
// x^m - 1 by the cyclotomic factors of proper divisors.
using Poly = std::vector<Int>;

Poly poly_div_exact(const Poly& num, const Poly& den) {
    Poly rem = num;
    Poly quot(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Int c = div_exact(rem[i + den.size() - 1], den.back());
        quot[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const Int& r : rem)
        if (!r.is_zero()) throw Error("cyclotomic division left a remainder");
    return quot;
}

Poly cyclotomic_polynomial(std::int64_t m) {
    // Phi_d for every divisor d of m, built up by exact division of x^d - 1.
    std::vector<std::pair<std::int64_t, Poly>> known;
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        Poly p(static_cast<std::size_t>(d) + 1, Int(0));
        p.front() = -1;
        p.back() = 1;  // x^d - 1
        for (const auto& [e, phi] : known)
            if (d % e == 0) p = poly_div_exact(p, phi);
        known.emplace_back(d, std::move(p));
    }
    return known.back().second;
}

}  // namespace

GModule cyclotomic_module(const Int& m) {
    const std::int64_t mm = order_as_int(m);
    if (mm < 2) throw InvalidInputError("cyclotomic_module: order must be >= 2");
    const Poly phi = cyclotomic_polynomial(mm);
    const Index n = static_cast<Index>(phi.size()) - 1;
    IntMatrix companion = IntMatrix::Zero(n, n);
    for (Index i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1;
    for (Index i = 0; i < n; ++i) companion(i, n - 1) = -phi[static_cast<std::size_t>(i)];
    return GModule{m, std::move(companion)};
}

GModule direct_sum_modules(const GModule& a, const GModule& b) {
    if (a.m != b.m)
        throw OrderMismatchError("direct_sum_modules: group orders differ");
    return GModule{a.m, block_diag(a.action, b.action)};
}

IntMatrix norm_matrix(const GModule& a) {
    const std::int64_t m = order_as_int(a.m);
    const Index n = a.rank();
    IntMatrix norm = IntMatrix::Zero(n, n);
    IntMatrix power = IntMatrix::Identity(n, n);
    for (std::int64_t i = 0; i < m; ++i) {
        norm += power;
        power = a.action * power;
    }
    return norm;
}

FinAbGroup invariants(const GModule& a) {
    const IntMatrix t_minus_1 = a.action - IntMatrix::Identity(a.rank(), a.rank());
    return FinAbGroup::free_group(kernel_basis(t_minus_1).cols());
}

FinAbGroup group_cohomology(const GModule& a, std::int64_t i) {
    if (i < 0) throw InvalidInputError("group_cohomology: negative degree");
    if (i == 0) return invariants(a);
    const IntMatrix t_minus_1 = a.action - IntMatrix::Identity(a.rank(), a.rank());
    const IntMatrix norm = norm_matrix(a);
    // N(T-1) = (T-1)N = T^m - 1 = 0, so each image lies in the other kernel.
    if (i % 2 == 1) return lattice_quotient(kernel_basis(norm), t_minus_1);
    return lattice_quotient(kernel_basis(t_minus_1), norm);
}

FinAbGroup tate_h0(const GModule& a) {
    // H-hat^0 = A^G / N(A) coincides with the even positive degrees of the
    // periodic resolution.
    const IntMatrix t_minus_1 = a.action - IntMatrix::Identity(a.rank(), a.rank());
    return lattice_quotient(kernel_basis(t_minus_1), norm_matrix(a));
}

}  // namespace cycoh
