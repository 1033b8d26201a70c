#pragma once

#include <cstdint>

#include "cycoh/abgroup.hpp"
#include "cycoh/intlinalg.hpp"
#include "cycoh/matrix.hpp"

namespace cycoh {

/// A module over Z[Z/m]: the free Z-module Z^n together with the action of a
/// chosen generator. Only T^m = I is required, not exact order m, so trivial
/// actions are legal; faithfulness is enforced by callers that need it.
struct GModule {
    Int m;             // group order, >= 1
    IntMatrix action;  // n x n generator matrix T with T^m = I

    Index rank() const { return action.rows(); }
};

/// Throws InvalidInputError unless m >= 1, action is square and T^m = I.
void validate(const GModule& a);

GModule trivial_module(const Int& m, Index rank);

/// Z[G/H] for the subgroup of index `index`: the cyclic shift permutation
/// action on Z^index. Throws InvalidIndexError unless index >= 1 divides m.
GModule induced_module(const Int& m, const Int& index);

/// The nontrivial integral character, T = [[-1]]; requires m even.
GModule character_eps(const Int& m);

/// Z[zeta_m]: companion matrix of the m-th cyclotomic polynomial, rank
/// phi(m); the generator acts with exact order m. Requires m >= 2.
GModule cyclotomic_module(const Int& m);

/// Block-diagonal sum; throws OrderMismatchError unless a.m = b.m.
GModule direct_sum_modules(const GModule& a, const GModule& b);

/// N = 1 + T + ... + T^(m-1).
IntMatrix norm_matrix(const GModule& a);

/// A^G = ker(T - 1), always free.
FinAbGroup invariants(const GModule& a);

/// H^i(Z/m, A) via the 2-periodic resolution: H^0 = A^G; odd i >= 1 gives
/// ker N / im(T - 1); even i >= 2 gives ker(T - 1) / im N.
FinAbGroup group_cohomology(const GModule& a, std::int64_t i);

/// Tate cohomology H-hat^0 = A^G / N(A).
FinAbGroup tate_h0(const GModule& a);

}  // namespace cycoh
