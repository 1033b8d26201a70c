#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycoh/abgroup.hpp"
#include "cycoh/cyclic_cohomology.hpp"

namespace cycoh {

/// A surface with a cyclic group action, described by the induced action on
/// H^2 plus fixed-locus data. The geometry itself is input, not computed:
/// the verifier checks the algebra the data is supposed to satisfy.
struct SurfaceWithAction {
    std::string name;
    Int m;       // order of the acting group, >= 2
    GModule h2;  // H^2(M, Z) with the generator action; h2.m == m
    std::vector<std::int64_t> fixed_curve_genera;  // one genus per fixed curve
    std::int64_t isolated_fixed_points = 0;
    bool h1_zero = false;         // asserts H^1(M, Z) = 0
    bool stabilizers_ok = false;  // asserts stabilizers are trivial or full
};

/// Hypothesis violations, empty when the instance is admissible: the action
/// must be nontrivial of order dividing m, must have a fixed point, and the
/// two assertion flags must hold.
std::vector<std::string> verify_hypotheses(const SurfaceWithAction& s);

/// H^1(G, H^2(M, Z)).
FinAbGroup lhs(const SurfaceWithAction& s);

/// Sum over fixed curves D of H^1(D, Z) tensor Z/m, i.e. (Z/m)^(2 sum g_D).
FinAbGroup rhs(const SurfaceWithAction& s);

struct Verdict {
    bool admissible = false;
    std::vector<std::string> violations;
    FinAbGroup lhs;
    FinAbGroup rhs;
    bool isomorphic = false;
};

/// Both sides are computed unconditionally; the comparison is only
/// meaningful when the instance is admissible.
Verdict check_main_theorem(const SurfaceWithAction& s);

struct DoubleCoverReport {
    std::int64_t d = 0;
    std::int64_t r = 0;      // rank of H^2
    std::int64_t genus = 0;  // genus of the branch curve
    FinAbGroup lhs_abstract;
    FinAbGroup rhs_abstract;
    bool consistent = false;
};

/// The double cover of P^2 branched over a smooth curve of degree 2d, with
/// its sheet-exchange involution: r = 2(2d^2 - 3d + 2), branch genus
/// (2d-1)(2d-2)/2, and both sides of the isomorphism equal (Z/2)^(r-2).
DoubleCoverReport double_cover_family(std::int64_t d);

/// True iff H^1 is unchanged by adding the induced module Z[G/H] of the
/// given index, the cohomological shadow of blowing up an orbit.
bool blowup_invariance_check(const GModule& a, const Int& index);

/// H^3_G(M, Z), which the verifier identifies with H^1(G, H^2(M, Z));
/// throws InadmissibleSurfaceError when hypotheses fail.
FinAbGroup h3_equivariant(const SurfaceWithAction& s);

/// The Geiser involution D -> (D.K)K - D on the Picard lattice of the
/// degree-2 del Pezzo surface, in the basis e0 (line class), e1..e7
/// (exceptional classes) with intersection form diag(1, -1, ..., -1).
GModule geiser_module();

}  // namespace cycoh
