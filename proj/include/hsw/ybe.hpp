#pragma once

#include <cstddef>
#include <vector>

#include "hsw/check_report.hpp"
#include "hsw/graded.hpp"
#include "hsw/operators.hpp"
#include "hsw/superalgebra.hpp"

namespace hsw {

/// r = Σ r[i][j] e_i ⊗ e_j in J ⊗ J. Must be even: r[i][j] = 0 unless |e_i| = |e_j|.
class TensorElement {
public:
    TensorElement() = default;
    TensorElement(SuperAlgebra algebra, Matrix coefficients);

    static TensorElement zero(const SuperAlgebra& algebra);

    const SuperAlgebra& algebra() const { return algebra_; }
    const Matrix& coefficients() const { return r_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return r_(i, j); }
    std::size_t dim() const { return r_.rows(); }

    /// α⊗α(r) = r
    bool is_alpha_stable() const;
    /// σ(r) = −r
    bool is_skew() const;

    friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.r_ == b.r_; }

private:
    SuperAlgebra algebra_;
    Matrix r_;
};

/// Element of J ⊗ J ⊗ J as an n×n×n coefficient array, legs in order (1, 2, 3).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(Field f, std::size_t n);

    std::size_t dim() const { return n_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
    bool is_zero() const;
    /// Adds k · (u ⊗ v ⊗ w).
    void add_outer(const Scalar& k, const Vector& u, const Vector& v, const Vector& w);

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    Field field_;
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

/// Even bilinear form with B(e_i, e_j) = B[i][j].
class BilinearForm {
public:
    BilinearForm() = default;
    BilinearForm(SuperAlgebra algebra, Matrix b);

    const SuperAlgebra& algebra() const { return algebra_; }
    const Matrix& matrix() const { return b_; }
    Scalar operator()(const Vector& x, const Vector& y) const;

    bool is_nondegenerate() const;
    /// B(x,y) = (−1)^{|x||y|} B(y,x)
    bool is_supersymmetric() const;
    /// B(x,y) = −(−1)^{|x||y|} B(y,x)
    bool is_super_skew() const;

private:
    SuperAlgebra algebra_;
    Matrix b_;
};

/// σ(x ⊗ y) = (−1)^{|x||y|} y ⊗ x
TensorElement sigma(const TensorElement& t);

/// T_r: J* → J with ⟨u*, T_r(v*)⟩ = ⟨u* ⊗ v*, r⟩ for even r.
EvenLinearMap tensor_map_bijection(const TensorElement& t);
/// Inverse of tensor_map_bijection.
TensorElement map_to_tensor(const SuperAlgebra& a, const EvenLinearMap& t);

/// r12·r13 − r12·r23 + r13·r23 with α on the untouched legs.
Tensor3 hjybe_residual(const TensorElement& t);

/// Evenness, super-skew-symmetry, α-stability and vanishing residual. The coadjoint
/// O-operator verdict for T_r is recorded as a note. Throws SingularMap if α is singular.
CheckReport is_solution(const TensorElement& t);

/// T_r checked as an O-operator for the coadjoint representation.
CheckReport solution_cross_check(const TensorElement& t, bool stop_at_first = false);

/// r = T − σ(T) in B ⊗ B, B = J ⋉ V* for the dual module, T = Σ T(v_s) ⊗ v*_s.
TensorElement lift_o_operator(const OOperatorCandidate& cand);

/// B(x, y) = ⟨T_r^{-1}(x), y⟩. Throws SingularMap if T_r is singular.
BilinearForm form_from_tensor(const TensorElement& t);

/// Nondegeneracy, evenness, super-skew-symmetry, α-invariance and the cyclic cocycle identity.
CheckReport check_symplectic(const BilinearForm& b, bool stop_at_first = false);

/// Solves B(x∘y, α(z)) = sign·(−1)^{|x||y|} B(α(y), x·z) for ∘. Throws NotSymplectic if the
/// form fails check_symplectic and SingularMap if the linear systems are singular.
SuperAlgebra prejordan_from_form(const SuperAlgebra& j, const BilinearForm& b, int sign = 1);

} // namespace hsw
