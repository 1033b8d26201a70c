#include "cycoh/spaces.hpp"

#include <string>
#include <utility>

#include "cycoh/intlinalg.hpp"

namespace cycoh {

namespace {

const FinAbGroup kTrivial{};

void require_nonneg_degree(std::int64_t degree, const char* where) {
    if (degree < 0) throw InvalidInputError(std::string(where) + ": negative degree");
}

void require_positive(std::int64_t n, const char* where) {
    if (n < 1) throw InvalidInputError(std::string(where) + ": n must be >= 1");
}

void require_order(const Int& m, const char* where) {
    if (m.sign() <= 0) throw InvalidInputError(std::string(where) + ": order must be >= 1");
}

}  // namespace

GradedGroup::GradedGroup(std::int64_t max_degree, Tail tail)
    : max_degree_(max_degree), tail_(tail) {
    require_nonneg_degree(max_degree, "GradedGroup");
}

void GradedGroup::set(std::int64_t degree, FinAbGroup g) {
    if (degree < 0 || degree > max_degree_)
        throw InvalidInputError("GradedGroup::set: degree out of range");
    if (g.is_trivial()) entries_.erase(degree);
    else entries_[degree] = std::move(g);
}

const FinAbGroup& GradedGroup::at(std::int64_t degree) const {
    if (degree > max_degree_ && tail_ == Tail::kUnknown)
        throw DegreeNotCoveredError("GradedGroup: degree " + std::to_string(degree) +
                                    " beyond truncated table (max " +
                                    std::to_string(max_degree_) + ")");
    const auto it = entries_.find(degree);
    return it == entries_.end() ? kTrivial : it->second;
}

GradedGroup bg_cohomology(const Int& m, std::int64_t max_degree) {
    require_order(m, "bg_cohomology");
    require_nonneg_degree(max_degree, "bg_cohomology");
    GradedGroup table(max_degree, Tail::kUnknown);
    table.set(0, FinAbGroup::free_group(1));
    for (std::int64_t d = 2; d <= max_degree; d += 2) table.set(d, FinAbGroup::cyclic(m));
    return table;
}

GradedGroup lens_cohomology(std::int64_t n, const Int& m) {
    require_positive(n, "lens_cohomology");
    require_order(m, "lens_cohomology");
    GradedGroup table(2 * n - 1, Tail::kZero);
    table.set(0, FinAbGroup::free_group(1));
    table.set(2 * n - 1, FinAbGroup::free_group(1));
    for (std::int64_t d = 2; d <= 2 * n - 2; d += 2) table.set(d, FinAbGroup::cyclic(m));
    return table;
}

GradedGroup lens_homology(std::int64_t n, const Int& m) {
    require_positive(n, "lens_homology");
    require_order(m, "lens_homology");
    GradedGroup table(2 * n - 1, Tail::kZero);
    table.set(0, FinAbGroup::free_group(1));
    table.set(2 * n - 1, FinAbGroup::free_group(1));
    for (std::int64_t d = 1; d <= 2 * n - 3; d += 2) table.set(d, FinAbGroup::cyclic(m));
    return table;
}

GradedGroup cone_lens_compact(std::int64_t n, const Int& m) {
    require_positive(n, "cone_lens_compact");
    require_order(m, "cone_lens_compact");
    GradedGroup table(2 * n, Tail::kZero);
    table.set(2 * n, FinAbGroup::free_group(1));
    for (std::int64_t d = 3; d <= 2 * n - 1; d += 2) table.set(d, FinAbGroup::cyclic(m));
    return table;
}

GradedGroup equivariant_rep_compact(std::int64_t n, const Int& m, std::int64_t max_degree) {
    require_positive(n, "equivariant_rep_compact");
    require_order(m, "equivariant_rep_compact");
    require_nonneg_degree(max_degree, "equivariant_rep_compact");
    // The table is the BG table shifted by 2n. A max_degree below 2n simply
    // yields an all-zero truncation rather than an error, matching the view
    // that the table is a window onto H^(j-2n)(BG).
    GradedGroup table(max_degree, Tail::kUnknown);
    if (2 * n <= max_degree) table.set(2 * n, FinAbGroup::free_group(1));
    for (std::int64_t d = 2 * n + 2; d <= max_degree; d += 2) table.set(d, FinAbGroup::cyclic(m));
    return table;
}

FinAbGroup kunneth_degree(const GradedGroup& a, const GradedGroup& b, std::int64_t degree) {
    require_nonneg_degree(degree, "kunneth_degree");
    FinAbGroup result;
    for (std::int64_t p = 0; p <= degree; ++p)
        result = direct_sum(result, tensor(a.at(p), b.at(degree - p)));
    for (std::int64_t p = 0; p <= degree + 1; ++p)
        result = direct_sum(result, tor(a.at(p), b.at(degree + 1 - p)));
    return result;
}

GradedGroup k_groups(const GradedGroup& fixed_locus, const Int& m, std::int64_t max_degree) {
    require_order(m, "k_groups");
    require_nonneg_degree(max_degree, "k_groups");
    for (const auto& [degree, group] : fixed_locus.entries())
        if (!group.torsion().empty())
            throw TorsionFixedLocusError("k_groups: fixed locus has torsion in degree " +
                                         std::to_string(degree));
    GradedGroup table(max_degree, Tail::kUnknown);
    for (std::int64_t j = 0; j <= max_degree; ++j) {
        FinAbGroup kj;
        for (std::int64_t q = 2; q <= j; q += 2)
            kj = direct_sum(kj, tensor_with_cyclic(fixed_locus.at(j - q), m));
        table.set(j, std::move(kj));
    }
    return table;
}

Index generator_count(const FinAbGroup& g) {
    return g.free_rank() + static_cast<Index>(g.torsion().size());
}

IntMatrix relation_matrix(const FinAbGroup& g) {
    const Index s = generator_count(g);
    const Index t = static_cast<Index>(g.torsion().size());
    IntMatrix rel = IntMatrix::Zero(s, t);
    for (Index i = 0; i < t; ++i)
        rel(g.free_rank() + i, i) = g.torsion()[static_cast<std::size_t>(i)];
    return rel;
}

namespace {

// Is v in the relation lattice of g, i.e. zero in the group?
bool in_relation_span(const IntMatrix& v, const FinAbGroup& g) {
    for (Index i = 0; i < g.free_rank(); ++i)
        if (!v(i, 0).is_zero()) return false;
    for (std::size_t i = 0; i < g.torsion().size(); ++i)
        if (!(v(g.free_rank() + static_cast<Index>(i), 0) % g.torsion()[i]).is_zero())
            return false;
    return true;
}

bool matrix_in_relation_span(const IntMatrix& w, const FinAbGroup& g) {
    for (Index j = 0; j < w.cols(); ++j)
        if (!in_relation_span(w.col(j), g)) return false;
    return true;
}

}  // namespace

void validate(const AbMap& f) {
    if (f.matrix.rows() != generator_count(f.target) ||
        f.matrix.cols() != generator_count(f.source))
        throw IllFormedMapError("AbMap: matrix shape does not match generator counts");
    // A generator of order d must land in the d-torsion of the target.
    for (std::size_t j = 0; j < f.source.torsion().size(); ++j) {
        const Index col = f.source.free_rank() + static_cast<Index>(j);
        const IntMatrix scaled = f.matrix.col(col) * f.source.torsion()[j];
        if (!in_relation_span(scaled, f.target))
            throw IllFormedMapError("AbMap: image of a torsion generator is not killed by its order");
    }
}

AbMap zero_map(const FinAbGroup& source, const FinAbGroup& target) {
    return AbMap{source, target,
                 IntMatrix::Zero(generator_count(target), generator_count(source))};
}

ExactnessReport exactness_check(const std::vector<AbMap>& maps) {
    for (const AbMap& f : maps) validate(f);
    for (std::size_t k = 0; k + 1 < maps.size(); ++k)
        if (maps[k].target != maps[k + 1].source)
            throw NotComposableError("exactness_check: target of map " + std::to_string(k + 1) +
                                     " differs from source of map " + std::to_string(k + 2));
    ExactnessReport report;
    report.all_exact = true;
    for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
        const AbMap& fin = maps[k];
        const AbMap& fout = maps[k + 1];
        NodeReport node;
        node.index = k + 1;
        node.group = fin.target;
        node.composite_zero = matrix_in_relation_span(fout.matrix * fin.matrix, fout.target);
        if (node.composite_zero) {
            // Lift to the presentation Z^s -> node group: the kernel of the
            // induced outgoing map is the projection of ker [fout | rel_K],
            // and both the incoming image and the node relations lie in it.
            const IntMatrix lifted_kernel =
                kernel_basis(hcat(fout.matrix, relation_matrix(fout.target)));
            const IntMatrix numerator =
                column_space_basis(lifted_kernel.topRows(fout.matrix.cols()));
            const IntMatrix denominator = hcat(fin.matrix, relation_matrix(node.group));
            if (numerator.cols() == 0) {
                if (!is_zero(denominator))
                    throw Error("exactness_check: denominator escapes the kernel lattice");
                node.homology = FinAbGroup();
            } else {
                node.homology = cokernel(solve_in_lattice(numerator, denominator));
            }
            node.exact = node.homology->is_trivial();
        }
        report.all_exact = report.all_exact && node.exact;
        report.nodes.push_back(std::move(node));
    }
    return report;
}

}  // namespace cycoh
