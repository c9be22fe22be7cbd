#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hsw/check_report.hpp"
#include "hsw/graded.hpp"

namespace hsw {

/// Structure constants of a bilinear product: e_i · e_j = Σ_k c(i, j, k) e_k.
class ProductTensor {
public:
    ProductTensor() = default;
    ProductTensor(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t dim() const { return n_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * n_ + j) * n_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }

    /// e_i · e_j as a coordinate vector.
    Vector basis_product(std::size_t i, std::size_t j) const;
    Vector apply(const Vector& x, const Vector& y) const;
    bool is_zero() const;

    ProductTensor& operator+=(const ProductTensor& o);
    friend ProductTensor operator+(ProductTensor a, const ProductTensor& b) { return a += b; }
    friend ProductTensor operator*(const Scalar& k, ProductTensor a);
    friend bool operator==(const ProductTensor&, const ProductTensor&) = default;

private:
    Field field_;
    std::size_t n_ = 0;
    std::vector<Scalar> c_;
};

/// Finite-dimensional Hom-superalgebra (J, ·, α) given by structure constants.
///
/// The product must be even: c(i, j, k) vanishes unless |k| = |i| + |j|. No symmetry
/// is imposed; super-commutativity is a checkable class.
class SuperAlgebra {
public:
    SuperAlgebra() = default;
    /// Throws ParityViolation for odd product entries and DimensionMismatch for shape errors.
    SuperAlgebra(GradedSpace space, ProductTensor product, EvenLinearMap twist, std::string label = {});

    /// Zero product with α = id.
    static SuperAlgebra zero(Field f, GradedSpace space, std::string label = {});

    const GradedSpace& space() const { return space_; }
    const ProductTensor& product() const { return product_; }
    const EvenLinearMap& twist() const { return twist_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }
    Field field() const { return product_.field(); }
    std::size_t dim() const { return space_.dim(); }

    Vector mul(const Vector& x, const Vector& y) const;
    Vector mul_basis(std::size_t i, std::size_t j) const { return product_.basis_product(i, j); }
    Vector apply_twist(const Vector& x) const { return twist_.apply(x); }
    Vector basis(std::size_t i) const { return basis_vector(field(), dim(), i); }
    /// Matrix of y ↦ e_i · y.
    Matrix left_multiplication(std::size_t i) const;
    /// Matrix of y ↦ x · y.
    Matrix left_multiplication(const Vector& x) const;

    /// Structure constants and twist agree; labels are ignored.
    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b)
    {
        return a.space_ == b.space_ && a.product_ == b.product_ && a.twist_ == b.twist_;
    }

private:
    GradedSpace space_;
    ProductTensor product_;
    EvenLinearMap twist_;
    std::string label_;
};

/// Hom-superalgebra with two products ≺ (left) and ≻ (right).
class DendriformAlgebra {
public:
    DendriformAlgebra() = default;
    DendriformAlgebra(GradedSpace space, ProductTensor left, ProductTensor right, EvenLinearMap twist,
                      std::string label = {});

    static DendriformAlgebra zero(Field f, GradedSpace space, std::string label = {});

    const GradedSpace& space() const { return left_.space(); }
    const std::string& label() const { return label_; }
    Field field() const { return left_.field(); }
    std::size_t dim() const { return left_.dim(); }
    const EvenLinearMap& twist() const { return left_.twist(); }

    /// (A, ≺, α)
    const SuperAlgebra& left() const { return left_; }
    /// (A, ≻, α)
    const SuperAlgebra& right() const { return right_; }
    /// (A, ⋆, α) with x ⋆ y = x ≺ y + x ≻ y.
    SuperAlgebra star() const;

    friend bool operator==(const DendriformAlgebra& a, const DendriformAlgebra& b)
    {
        return a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    SuperAlgebra left_;
    SuperAlgebra right_;
    std::string label_;
};

enum class AlgebraClass {
    supercommutative,
    hom_jordan,
    hom_associative,
    hom_alternative,
    hom_pre_jordan,
    multiplicative_twist,
};

enum class DendriformClass { hom_dendriform, hom_pre_alternative, multiplicative_twist };

std::string_view class_name(AlgebraClass c);
std::string_view class_name(DendriformClass c);
std::optional<AlgebraClass> parse_algebra_class(std::string_view name);
std::optional<DendriformClass> parse_dendriform_class(std::string_view name);

/// as_α(x, y, z) = (x·y)·α(z) − α(x)·(y·z)
Vector hom_associator(const SuperAlgebra& a, const Vector& x, const Vector& y, const Vector& z);

/// Evaluates the defining identities of `cls` on every homogeneous basis tuple.
CheckReport check_class(const SuperAlgebra& a, AlgebraClass cls, bool stop_at_first = false);

/// Hom-pre-Jordan identities in the expanded form built from the (x,y,z,u)^1 and
/// (x,y,z,u)^2 differences and ∘-associators; cross-checks the defining form.
CheckReport check_prejordan_expanded(const SuperAlgebra& a, bool stop_at_first = false);

CheckReport check_dendriform_class(const DendriformAlgebra& d, DendriformClass cls, bool stop_at_first = false);

/// φ(e_i · e_j) = φ(e_i) · φ(e_j) on all basis pairs.
CheckReport check_morphism(const SuperAlgebra& a, const SuperAlgebra& b, const EvenLinearMap& phi,
                           bool stop_at_first = false);

/// Product x ∘ y = φ(x)·φ(y), twist φ∘α. Throws NotAMorphism unless φ is an
/// endomorphism of A's product or `override_check` is set.
SuperAlgebra yau_twist(const SuperAlgebra& a, const EvenLinearMap& phi, bool override_check = false);

/// x ∗ y = x·y + (−1)^{|x||y|} y·x, same twist.
SuperAlgebra plus_product(const SuperAlgebra& a);

/// x ∘ y = x ≻ y + (−1)^{|x||y|} y ≺ x, same twist.
SuperAlgebra dendriform_to_prejordan(const DendriformAlgebra& d);

/// Associated Hom-Jordan product of a pre-Jordan algebra; same construction as plus_product.
SuperAlgebra prejordan_to_jordan(const SuperAlgebra& p);

} // namespace hsw
