#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cycoh/abgroup.hpp"
#include "cycoh/matrix.hpp"

namespace cycoh {

/// What a GradedGroup asserts about degrees above max_degree: kZero for a
/// complete table (compact space), kUnknown for a truncated view of an
/// infinite table (classifying-space style); reading past the end of a
/// kUnknown table throws DegreeNotCoveredError.
enum class Tail { kZero, kUnknown };

/// Finitely supported table degree -> FinAbGroup.
class GradedGroup {
public:
    GradedGroup() = default;
    GradedGroup(std::int64_t max_degree, Tail tail);

    void set(std::int64_t degree, FinAbGroup g);
    /// Trivial for unstored degrees in range and for negative degrees.
    const FinAbGroup& at(std::int64_t degree) const;

    std::int64_t max_degree() const { return max_degree_; }
    Tail tail() const { return tail_; }
    /// Stored nontrivial entries only.
    const std::map<std::int64_t, FinAbGroup>& entries() const { return entries_; }

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    std::map<std::int64_t, FinAbGroup> entries_;
    std::int64_t max_degree_ = 0;
    Tail tail_ = Tail::kZero;
};

/// H^*(BZ/m): Z in degree 0, Z/m in positive even degrees; truncated table.
GradedGroup bg_cohomology(const Int& m, std::int64_t max_degree);

/// H^*(L_{2n-1}(m)): Z in degrees 0 and 2n-1, Z/m in even degrees 2..2n-2.
GradedGroup lens_cohomology(std::int64_t n, const Int& m);

/// H_*(L_{2n-1}(m)): Z in degrees 0 and 2n-1, Z/m in odd degrees 1..2n-3.
GradedGroup lens_homology(std::int64_t n, const Int& m);

/// H^*_c of the open cone X over L_{2n-1}(m), the shifted reduced lens
/// table: Z/m in odd degrees 3..2n-1, Z in degree 2n.
GradedGroup cone_lens_compact(std::int64_t n, const Int& m);

/// H^*_{c,G}(V) for the rank-n representation V: the BG table shifted up by
/// 2n, truncated at max_degree (all zero when max_degree < 2n).
GradedGroup equivariant_rep_compact(std::int64_t n, const Int& m, std::int64_t max_degree);

/// Degree-d Kunneth group of a product:
/// sum of A^p x B^q over p+q = d plus Tor(A^p, B^q) over p+q = d+1.
FinAbGroup kunneth_degree(const GradedGroup& a, const GradedGroup& b, std::int64_t degree);

/// K^j = sum over p+q = j, q > 0 even, of fixed_locus^p tensor Z/m. Requires
/// a torsion-free fixed-locus table, else TorsionFixedLocusError.
GradedGroup k_groups(const GradedGroup& fixed_locus, const Int& m, std::int64_t max_degree);

/// Number of generators in the canonical presentation (free + torsion).
Index generator_count(const FinAbGroup& g);

/// Relation columns d_i * e_(free_rank + i), one per torsion generator.
IntMatrix relation_matrix(const FinAbGroup& g);

/// Homomorphism between finitely generated abelian groups, as a matrix on
/// canonical generators (free generators first, then torsion generators in
/// chain order; columns = images of source generators).
struct AbMap {
    FinAbGroup source;
    FinAbGroup target;
    IntMatrix matrix;
};

/// Throws IllFormedMapError unless dimensions match the generator counts and
/// each source generator of order d maps to a class killed by d.
void validate(const AbMap& f);

/// Zero map, and the map sending generator j of the source to entries(j).
AbMap zero_map(const FinAbGroup& source, const FinAbGroup& target);

struct NodeReport {
    std::size_t index = 0;   // position of the node group in the chain, 1-based
    FinAbGroup group;        // the node A_index
    bool composite_zero = false;
    bool exact = false;
    std::optional<FinAbGroup> homology;  // ker/im when the composite vanishes
};

struct ExactnessReport {
    bool all_exact = false;
    std::vector<NodeReport> nodes;
};

/// Checks A_0 -> A_1 -> ... -> A_L at every interior node A_1..A_(L-1):
/// composite of consecutive maps must vanish and ker(next)/im(prev) must be
/// trivial. Throws NotComposableError when target_k != source_(k+1) and
/// IllFormedMapError for invalid maps.
ExactnessReport exactness_check(const std::vector<AbMap>& maps);

}  // namespace cycoh
