#pragma once

#include "hsw/check_report.hpp"
#include "hsw/graded.hpp"
#include "hsw/representation.hpp"
#include "hsw/superalgebra.hpp"

namespace hsw {

/// Even map T: V → J paired with the module (V, π, β) it is tested against.
struct OOperatorCandidate {
    EvenLinearMap map;
    Representation rep;

    /// Throws DimensionMismatch unless T maps rep's space into rep's base.
    OOperatorCandidate(EvenLinearMap t, Representation r);
};

/// αT = Tβ and T(u)·T(v) = T(π(Tu)v + (−1)^{|u||v|}π(Tv)u) on all basis pairs of V.
CheckReport check_o_operator(const OOperatorCandidate& cand, bool stop_at_first = false);

/// Weight-zero Rota-Baxter: O-operator for the adjoint representation.
CheckReport check_rota_baxter(const SuperAlgebra& a, const EvenLinearMap& r, bool stop_at_first = false);

/// Gr(T) = {T(u) + u} is α⊕β-stable and closed in the semidirect product.
CheckReport graph_is_subalgebra(const OOperatorCandidate& cand, bool stop_at_first = false);

/// Nα = αN and N(x)·N(y) = N(N(x)·y + x·N(y) − N(x·y)) on all basis pairs.
CheckReport nijenhuis_check(const SuperAlgebra& a, const EvenLinearMap& n, bool stop_at_first = false);

/// Block map [[0, −T], [0, 0]] on J ⊕ V.
EvenLinearMap nijenhuis_of(const OOperatorCandidate& cand);

/// (V, ⋆, β) with u ⋆ v = π(T(u))v. Throws NotAnOOperator if T fails check_o_operator.
SuperAlgebra induced_prejordan(const OOperatorCandidate& cand);

/// T(u⋆v + (−1)^{|u||v|} v⋆u) = T(u)·T(v) on all basis pairs of V.
CheckReport induced_homomorphism_report(const OOperatorCandidate& cand, bool stop_at_first = false);

/// (A, ∘, α) with x ∘ y = R(x)·y. Never gated on the Rota-Baxter verdict.
SuperAlgebra rb_prejordan(const SuperAlgebra& a, const EvenLinearMap& r);

/// (J, ∘, α) with x ∘ y = T(π(x)(T^{-1}(y))). Throws NotAnOOperator or SingularMap.
SuperAlgebra compatible_prejordan(const OOperatorCandidate& cand);

} // namespace hsw
