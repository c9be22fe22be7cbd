#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hsw/check_report.hpp"
#include "hsw/graded.hpp"
#include "hsw/superalgebra.hpp"

namespace hsw {

/// Module (V, π, β) over a Hom-superalgebra; π is stored as one matrix per base basis element.
class Representation {
public:
    Representation() = default;
    /// Throws DimensionMismatch on shape errors and ParityViolation when some π(e_i)
    /// does not shift parity by |e_i|.
    Representation(SuperAlgebra base, GradedSpace space, std::vector<Matrix> action, EvenLinearMap twist,
                   std::string label = {});

    /// π = 0, β = id.
    static Representation zero(const SuperAlgebra& base, GradedSpace space, std::string label = {});

    const SuperAlgebra& base() const { return base_; }
    const GradedSpace& space() const { return space_; }
    const std::vector<Matrix>& action() const { return action_; }
    const Matrix& action(std::size_t i) const { return action_.at(i); }
    /// π(x) for a general x in the base.
    Matrix action_of(const Vector& x) const;
    const EvenLinearMap& twist() const { return twist_; }
    const std::string& label() const { return label_; }
    Field field() const { return base_.field(); }
    std::size_t dim() const { return space_.dim(); }

private:
    SuperAlgebra base_;
    GradedSpace space_;
    std::vector<Matrix> action_;
    EvenLinearMap twist_;
    std::string label_;
};

/// Module axioms: the twist compatibility βπ(x) = π(αx)β and the two cubic identities,
/// on all basis triples applied to every basis vector of V.
CheckReport check_representation(const Representation& rho, bool stop_at_first = false);

/// π(e_i) = left multiplication by e_i, β = α.
Representation adjoint_rep(const SuperAlgebra& a);

enum class SemidirectSign {
    /// (x+u)·(y+v) = x·y + π(x)v + (−1)^{|u||y|} π(y)u
    corrected,
    /// Displayed variant: the V·J block is π(0)u = 0.
    literal,
};

/// Algebra on J ⊕ V with twist α ⊕ β.
SuperAlgebra semidirect(const Representation& rho, SemidirectSign sign = SemidirectSign::corrected);

/// Plain dual action: ⟨π*(x)ξ, u⟩ = (−1)^{|x||ξ|}⟨ξ, π(x)u⟩, one matrix per base basis element.
std::vector<Matrix> plain_dual_action(const Representation& rho);

/// (V*, π⋆, (β^{-1})*) with π⋆(x) = π*(α(x)) ∘ (β^{-2})*. Throws SingularMap if α or β is singular.
Representation dual_rep(const Representation& rho);

/// ⟨π⋆(x)ξ, u⟩ = (−1)^{|x||ξ|}⟨ξ, π(α^{-1}x)(β^{-2}u)⟩ on all basis triples.
CheckReport check_dual_pairing(const Representation& rho, bool stop_at_first = false);

/// dual_rep(adjoint_rep(a))
Representation coadjoint_rep(const SuperAlgebra& a);

/// Representation of plus_product(p) on p's space by left ∘-multiplication, β = α.
Representation left_mult_rep(const SuperAlgebra& p);

/// Passes iff [P is Hom-pre-Jordan with multiplicative twist] agrees with [its associated
/// algebra is Hom-Jordan and left ∘-multiplication is a module]. Side verdicts go to notes.
CheckReport left_mult_equivalence(const SuperAlgebra& p);

} // namespace hsw
