#include "cycoh/surface.hpp"

#include <numeric>

namespace cycoh {

std::vector<std::string> verify_hypotheses(const SurfaceWithAction& s) {
    std::vector<std::string> violations;
    if (s.m < Int(2)) violations.push_back("group order must be at least 2");
    if (s.h2.m != s.m) violations.push_back("module group order differs from m");
    if (s.h2.action.rows() != s.h2.action.cols()) {
        violations.push_back("action matrix not square");
        return violations;
    }
    if (is_identity(s.h2.action)) violations.push_back("action on H^2 is trivial");
    if (s.m.sign() > 0 && !is_identity(matrix_power(s.h2.action, to_int64(s.m))))
        violations.push_back("action matrix does not satisfy T^m = I");
    if (s.fixed_curve_genera.empty() && s.isolated_fixed_points == 0)
        violations.push_back("fixed locus is empty");
    for (std::int64_t g : s.fixed_curve_genera)
        if (g < 0) violations.push_back("negative curve genus");
    if (s.isolated_fixed_points < 0) violations.push_back("negative fixed point count");
    if (!s.h1_zero) violations.push_back("H^1(M, Z) = 0 not asserted");
    if (!s.stabilizers_ok) violations.push_back("stabilizer condition not asserted");
    return violations;
}

FinAbGroup lhs(const SurfaceWithAction& s) { return group_cohomology(s.h2, 1); }

FinAbGroup rhs(const SurfaceWithAction& s) {
    const std::int64_t total_genus =
        std::accumulate(s.fixed_curve_genera.begin(), s.fixed_curve_genera.end(),
                        std::int64_t{0});
    return direct_sum_power(FinAbGroup::cyclic(s.m), 2 * total_genus);
}

Verdict check_main_theorem(const SurfaceWithAction& s) {
    Verdict verdict;
    verdict.violations = verify_hypotheses(s);
    verdict.admissible = verdict.violations.empty();
    verdict.lhs = lhs(s);
    verdict.rhs = rhs(s);
    verdict.isomorphic = verdict.lhs == verdict.rhs;
    return verdict;
}

DoubleCoverReport double_cover_family(std::int64_t d) {
    if (d < 1) throw InvalidInputError("double_cover_family: d must be >= 1");
    DoubleCoverReport report;
    report.d = d;
    report.r = 2 * (2 * d * d - 3 * d + 2);
    report.genus = (2 * d - 1) * (2 * d - 2) / 2;
    report.lhs_abstract = direct_sum_power(FinAbGroup::cyclic(Int(2)), report.r - 2);
    report.rhs_abstract = direct_sum_power(FinAbGroup::cyclic(Int(2)), 2 * report.genus);
    report.consistent = report.lhs_abstract == report.rhs_abstract;
    return report;
}

bool blowup_invariance_check(const GModule& a, const Int& index) {
    const GModule blown_up = direct_sum_modules(a, induced_module(a.m, index));
    return group_cohomology(blown_up, 1) == group_cohomology(a, 1);
}

FinAbGroup h3_equivariant(const SurfaceWithAction& s) {
    const std::vector<std::string> violations = verify_hypotheses(s);
    if (!violations.empty())
        throw InadmissibleSurfaceError("h3_equivariant: " + violations.front());
    return lhs(s);
}

GModule geiser_module() {
    // Intersection numbers in the basis e0, e1..e7: e0.e0 = 1, ei.ei = -1,
    // K = -3 e0 + e1 + ... + e7, so e0.K = -3 and ei.K = -1, giving
    // T(e0) = -3K - e0 and T(ei) = -K - ei.
    IntMatrix t(8, 8);
    for (Index j = 0; j < 8; ++j) {
        const Int dk = j == 0 ? Int(-3) : Int(-1);
        for (Index i = 0; i < 8; ++i) {
            const Int k_i = i == 0 ? Int(-3) : Int(1);
            t(i, j) = dk * k_i - Int(i == j ? 1 : 0);
        }
    }
    return GModule{Int(2), std::move(t)};
}

}  // namespace cycoh
