#pragma once

#include <vector>

#include "cycoh/abgroup.hpp"
#include "cycoh/matrix.hpp"

namespace cycoh {

/// Smith normal form certificate: U * A * V = D with U, V unimodular and D
/// diagonal, nonnegative, d1 | d2 | ... (zeros trailing). D is unique for A.
struct SnfCertificate {
    IntMatrix u;  // rows x rows
    IntMatrix d;  // rows x cols
    IntMatrix v;  // cols x cols
};

/// Total on all integer matrices, including empty shapes.
SnfCertificate smith_normal_form(const IntMatrix& a);

/// Rank of the column span (number of nonzero SNF diagonal entries).
Index matrix_rank(const IntMatrix& a);

/// Columns form a Z-basis of { v : a*v = 0 }; full column rank.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^rows / (column span of a), in canonical form.
FinAbGroup cokernel(const IntMatrix& a);

/// Cokernel together with coordinates on the quotient: to_coords maps the
/// ambient Z^rows onto generator coordinates of the canonical form, free
/// generators first and then torsion generators in chain order; from_coords
/// columns are ambient lifts of the generators (to_coords * from_coords = I);
/// orders lists 0 per free generator followed by the invariant factors.
struct CokernelPresentation {
    FinAbGroup group;
    IntMatrix to_coords;
    IntMatrix from_coords;
    std::vector<Int> orders;
};
CokernelPresentation cokernel_presentation(const IntMatrix& a);

/// X with b*X = c. Requires b of full column rank; throws NoSolutionError
/// when a column of c is not in the integer column span of b.
IntMatrix solve_in_lattice(const IntMatrix& b, const IntMatrix& c);

/// Basis (full column rank) of the lattice generated by the columns of a.
IntMatrix column_space_basis(const IntMatrix& a);

/// span(k) / span(m) as an abstract group; requires span(m) a subset of
/// span(k), else NoSolutionError.
FinAbGroup lattice_quotient(const IntMatrix& k, const IntMatrix& m);

}  // namespace cycoh
