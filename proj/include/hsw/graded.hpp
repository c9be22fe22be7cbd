#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hsw/scalar.hpp"

namespace hsw {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr bool is_odd(Parity p) { return p == Parity::odd; }

/// (-1)^{|p||q|}: -1 exactly when both parities are odd.
constexpr int koszul_sign(Parity p, Parity q) { return is_odd(p) && is_odd(q) ? -1 : 1; }

/// koszul_sign as a field element.
Scalar koszul_scalar(Field f, Parity p, Parity q);

const char* parity_name(Parity p);

/// Z2-graded vector space with a fixed homogeneous basis.
///
/// Basis elements carry display names used by reports and the file format.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<Parity> parities, std::vector<std::string> names = {});

    /// `even` even basis vectors followed by `odd` odd ones, named e0, e1, ...
    static GradedSpace with_dims(std::size_t even, std::size_t odd);

    std::size_t dim() const { return parities_.size(); }
    Parity parity(std::size_t i) const { return parities_.at(i); }
    const std::vector<Parity>& parities() const { return parities_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t even_dim() const;
    std::size_t odd_dim() const { return dim() - even_dim(); }
    /// "<even>|<odd>"
    std::string signature() const;

    /// Index of the basis element called `name`, or dim() when absent.
    std::size_t index_of(const std::string& name) const;

    /// Concatenation of bases; clashing names of `other` get a prime suffix.
    GradedSpace direct_sum(const GradedSpace& other) const;
    /// Dual space: same parity vector, names suffixed with '*'.
    GradedSpace dual() const;

    /// Spaces are equal when their parity vectors agree; names are labels only.
    friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.parities_ == b.parities_; }

private:
    std::vector<Parity> parities_;
    std::vector<std::string> names_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector basis_vector(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector& add_scaled(Vector& acc, const Scalar& k, const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& k, const Vector& v);

/// "2 e + 1/4 x", "-y", or "0".
std::string format_combination(const Vector& v, const GradedSpace& space);

/// Dense matrix over an exact field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& k, Matrix a);

    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Inverse by exact Gauss-Jordan elimination; throws SingularMap.
Matrix invert(const Matrix& m);
std::size_t rank(Matrix m);

/// Parity-preserving linear map between graded spaces.
///
/// The matrix is target-dim x source-dim; column j is the image of source basis j.
class EvenLinearMap {
public:
    EvenLinearMap() = default;
    /// Throws DimensionMismatch on shape errors and ParityViolation when an
    /// entry connects basis vectors of different parity.
    EvenLinearMap(GradedSpace source, GradedSpace target, Matrix m);

    static EvenLinearMap identity(Field f, const GradedSpace& space);
    static EvenLinearMap zero(Field f, const GradedSpace& source, const GradedSpace& target);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    const Matrix& matrix() const { return m_; }
    Field field() const { return m_.field(); }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    bool is_endomorphism() const { return source_ == target_; }

    Vector apply(const Vector& v) const;
    Vector image(std::size_t j) const { return m_.column(j); }

    friend bool operator==(const EvenLinearMap& a, const EvenLinearMap& b) { return a.m_ == b.m_ && a.source_ == b.source_ && a.target_ == b.target_; }

private:
    GradedSpace source_;
    GradedSpace target_;
    Matrix m_;
};

/// f ∘ g
EvenLinearMap compose(const EvenLinearMap& f, const EvenLinearMap& g);
EvenLinearMap operator+(const EvenLinearMap& f, const EvenLinearMap& g);
EvenLinearMap operator*(const Scalar& k, const EvenLinearMap& f);

/// f*: W* -> V* with <f*(xi), v> = <xi, f(v)>.
EvenLinearMap dual_transpose(const EvenLinearMap& f);
/// Throws DimensionMismatch for non-square maps and SingularMap for singular ones.
EvenLinearMap invert_even_map(const EvenLinearMap& f);
/// f^k for an endomorphism; negative k inverts first.
EvenLinearMap power(const EvenLinearMap& f, int k);

/// Canonical pairing <xi, v> = sum_i xi_i v_i of a dual vector with a vector.
Scalar pair(const Vector& xi, const Vector& v);
/// Reversed pairing <v, xi> = (-1)^{|xi||v|} <xi, v>, extended bilinearly over homogeneous components.
Scalar pair_reversed(const GradedSpace& space, const Vector& v, const Vector& xi);
/// <u1*⊗u2*, v1⊗v2> = (-1)^{|u2*||v1|} <u1*, v1><u2*, v2>, with both 2-tensors given as
/// coefficient matrices over (dual) basis pairs.
Scalar pair_tensor(const GradedSpace& space, const Matrix& xi, const Matrix& t);

} // namespace hsw
