#include "cycoh/intlinalg.hpp"

#include <algorithm>
#include <utility>

namespace cycoh {

namespace {

// Min-abs-value pivot in the trailing block starting at (t, t); row-major
// scan with strict improvement keeps the algorithm deterministic.
bool find_pivot(const IntMatrix& d, Index t, Index& pi, Index& pj) {
    bool found = false;
    Int best;
    for (Index i = t; i < d.rows(); ++i) {
        for (Index j = t; j < d.cols(); ++j) {
            if (d(i, j).is_zero()) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                found = true;
                best = std::move(a);
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SnfCertificate smith_normal_form(const IntMatrix& a) {
    const Index r = a.rows();
    const Index c = a.cols();
    SnfCertificate cert{IntMatrix::Identity(r, r), a, IntMatrix::Identity(c, c)};
    IntMatrix& d = cert.d;
    IntMatrix& u = cert.u;
    IntMatrix& v = cert.v;
    const Index k = std::min(r, c);
    for (Index t = 0; t < k; ++t) {
        for (;;) {
            Index pi = 0, pj = 0;
            if (!find_pivot(d, t, pi, pj)) {
                t = k;  // trailing block is zero; done
                break;
            }
            if (pi != t) {
                d.row(t).swap(d.row(pi));
                u.row(t).swap(u.row(pi));
            }
            if (pj != t) {
                d.col(t).swap(d.col(pj));
                v.col(t).swap(v.col(pj));
            }
            // Clear row t and column t. A nonzero remainder is strictly
            // smaller than the pivot, so swapping it into the pivot seat and
            // sweeping again terminates.
            bool clean = false;
            while (!clean) {
                clean = true;
                for (Index i = t + 1; i < r; ++i) {
                    if (d(i, t).is_zero()) continue;
                    const Int q = d(i, t) / d(t, t);
                    if (!q.is_zero()) {
                        d.row(i) -= d.row(t) * q;
                        u.row(i) -= u.row(t) * q;
                    }
                    if (!d(i, t).is_zero()) {
                        d.row(t).swap(d.row(i));
                        u.row(t).swap(u.row(i));
                        clean = false;
                    }
                }
                for (Index j = t + 1; j < c; ++j) {
                    if (d(t, j).is_zero()) continue;
                    const Int q = d(t, j) / d(t, t);
                    if (!q.is_zero()) {
                        d.col(j) -= d.col(t) * q;
                        v.col(j) -= v.col(t) * q;
                    }
                    if (!d(t, j).is_zero()) {
                        d.col(t).swap(d.col(j));
                        v.col(t).swap(v.col(j));
                        clean = false;
                    }
                }
            }
            // Pull any entry the pivot fails to divide into row t and redo;
            // the next sweep shrinks the pivot, so this terminates. On exit
            // the pivot divides the whole trailing block, which makes the
            // final diagonal a divisibility chain.
            bool divides_block = true;
            for (Index i = t + 1; i < r && divides_block; ++i) {
                for (Index j = t + 1; j < c; ++j) {
                    if (!(d(i, j) % d(t, t)).is_zero()) {
                        d.row(t) += d.row(i);
                        u.row(t) += u.row(i);
                        divides_block = false;
                        break;
                    }
                }
            }
            if (divides_block) break;
        }
        if (t == k) break;
    }
    for (Index t = 0; t < k; ++t) {
        if (d(t, t).sign() < 0) {
            d.row(t) = -d.row(t);
            u.row(t) = -u.row(t);
        }
    }
    return cert;
}

namespace {

Index diagonal_rank(const IntMatrix& d) {
    Index rank = 0;
    const Index k = std::min(d.rows(), d.cols());
    for (Index t = 0; t < k; ++t)
        if (!d(t, t).is_zero()) ++rank;
    return rank;
}

}  // namespace

Index matrix_rank(const IntMatrix& a) { return diagonal_rank(smith_normal_form(a).d); }

IntMatrix kernel_basis(const IntMatrix& a) {
    const SnfCertificate cert = smith_normal_form(a);
    const Index rank = diagonal_rank(cert.d);
    // A*V has columns d_j * (U^-1 e_j); columns past the rank are zero, and
    // the matching columns of V are a kernel basis.
    return cert.v.rightCols(a.cols() - rank);
}

FinAbGroup cokernel(const IntMatrix& a) {
    const SnfCertificate cert = smith_normal_form(a);
    const Index k = std::min(a.rows(), a.cols());
    std::vector<Int> torsion;
    torsion.reserve(static_cast<std::size_t>(a.rows()));
    for (Index i = 0; i < k; ++i) torsion.push_back(cert.d(i, i));
    for (Index i = k; i < a.rows(); ++i) torsion.emplace_back(0);
    return FinAbGroup(0, std::move(torsion));
}

CokernelPresentation cokernel_presentation(const IntMatrix& a) {
    const SnfCertificate cert = smith_normal_form(a);
    const Index r = a.rows();
    const Index k = std::min(r, a.cols());
    // In coordinates y = U x the relation lattice is spanned by d_j e_j, so
    // the quotient splits coordinate-wise: d = 0 (or no diagonal entry at
    // all) gives a Z factor, d = 1 a trivial one, d >= 2 a Z/d factor.
    std::vector<Index> free_rows, torsion_rows;
    std::vector<Int> invariants;
    for (Index i = 0; i < r; ++i) {
        const Int d = i < k ? cert.d(i, i) : Int(0);
        if (d.is_zero()) {
            free_rows.push_back(i);
        } else if (d != Int(1)) {
            torsion_rows.push_back(i);
            invariants.push_back(d);
        }
    }
    const IntMatrix u_inverse = solve_in_lattice(cert.u, IntMatrix::Identity(r, r));
    CokernelPresentation result;
    const Index s = static_cast<Index>(free_rows.size() + torsion_rows.size());
    result.to_coords = IntMatrix(s, r);
    result.from_coords = IntMatrix(r, s);
    Index row = 0;
    for (Index i : free_rows) {
        result.to_coords.row(row) = cert.u.row(i);
        result.from_coords.col(row) = u_inverse.col(i);
        result.orders.emplace_back(0);
        ++row;
    }
    for (std::size_t p = 0; p < torsion_rows.size(); ++p) {
        result.to_coords.row(row) = cert.u.row(torsion_rows[p]);
        result.from_coords.col(row) = u_inverse.col(torsion_rows[p]);
        result.orders.push_back(invariants[p]);
        ++row;
    }
    result.group = FinAbGroup(static_cast<std::int64_t>(free_rows.size()), std::move(invariants));
    return result;
}

IntMatrix solve_in_lattice(const IntMatrix& b, const IntMatrix& c) {
    if (b.rows() != c.rows())
        throw InvalidInputError("solve_in_lattice: row count mismatch");
    const SnfCertificate cert = smith_normal_form(b);
    const Index n = b.cols();
    if (diagonal_rank(cert.d) != n)
        throw InvalidInputError("solve_in_lattice: matrix not of full column rank");
    // B X = C  <=>  D Y = U C with X = V Y; D has the nonzero diagonal on
    // its first n rows and zero rows below.
    const IntMatrix rhs = cert.u * c;
    IntMatrix y(n, c.cols());
    for (Index j = 0; j < c.cols(); ++j) {
        for (Index i = 0; i < n; ++i) {
            if (!(rhs(i, j) % cert.d(i, i)).is_zero())
                throw NoSolutionError("solve_in_lattice: column not in the integer span");
            y(i, j) = rhs(i, j) / cert.d(i, i);
        }
        for (Index i = n; i < b.rows(); ++i)
            if (!rhs(i, j).is_zero())
                throw NoSolutionError("solve_in_lattice: column not in the integer span");
    }
    return cert.v * y;
}

IntMatrix column_space_basis(const IntMatrix& a) {
    const SnfCertificate cert = smith_normal_form(a);
    const Index rank = diagonal_rank(cert.d);
    const IntMatrix w = a * cert.v;
    return w.leftCols(rank);
}

FinAbGroup lattice_quotient(const IntMatrix& k, const IntMatrix& m) {
    if (k.rows() != m.rows())
        throw InvalidInputError("lattice_quotient: ambient dimension mismatch");
    const IntMatrix basis = column_space_basis(k);
    if (basis.cols() == 0) {
        if (!is_zero(m)) throw NoSolutionError("lattice_quotient: span(m) not inside span(k)");
        return FinAbGroup();
    }
    return cokernel(solve_in_lattice(basis, m));
}

}  // namespace cycoh
