#include "hsw/graded.hpp"

#include <algorithm>
#include <utility>

namespace hsw {

Scalar koszul_scalar(Field f, Parity p, Parity q)
{
    return Scalar::from_int(f, koszul_sign(p, q));
}

const char* parity_name(Parity p)
{
    return is_odd(p) ? "odd" : "even";
}

GradedSpace::GradedSpace(std::vector<Parity> parities, std::vector<std::string> names)
    : parities_(std::move(parities)), names_(std::move(names))
{
    if (names_.empty()) {
        for (std::size_t i = 0; i < parities_.size(); ++i)
            names_.push_back("e" + std::to_string(i));
    }
    if (names_.size() != parities_.size())
        throw DimensionMismatch("graded space: " + std::to_string(names_.size()) + " names for "
                                + std::to_string(parities_.size()) + " basis vectors");
}

GradedSpace GradedSpace::with_dims(std::size_t even, std::size_t odd)
{
    std::vector<Parity> p(even, Parity::even);
    p.insert(p.end(), odd, Parity::odd);
    return GradedSpace(std::move(p));
}

std::size_t GradedSpace::even_dim() const
{
    return static_cast<std::size_t>(std::count(parities_.begin(), parities_.end(), Parity::even));
}

std::string GradedSpace::signature() const
{
    return std::to_string(even_dim()) + "|" + std::to_string(odd_dim());
}

std::size_t GradedSpace::index_of(const std::string& name) const
{
    const auto it = std::find(names_.begin(), names_.end(), name);
    return static_cast<std::size_t>(it - names_.begin());
}

GradedSpace GradedSpace::direct_sum(const GradedSpace& other) const
{
    auto parities = parities_;
    auto names = names_;
    for (std::size_t i = 0; i < other.dim(); ++i) {
        parities.push_back(other.parity(i));
        std::string n = other.name(i);
        while (std::find(names.begin(), names.end(), n) != names.end())
            n += "'";
        names.push_back(std::move(n));
    }
    return GradedSpace(std::move(parities), std::move(names));
}

GradedSpace GradedSpace::dual() const
{
    auto names = names_;
    for (auto& n : names)
        n += "*";
    return GradedSpace(parities_, std::move(names));
}

Vector zero_vector(Field f, std::size_t n)
{
    return Vector(n, Scalar::zero(f));
}

Vector basis_vector(Field f, std::size_t n, std::size_t i)
{
    auto v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector& add_scaled(Vector& acc, const Scalar& k, const Vector& v)
{
    if (acc.size() != v.size())
        throw DimensionMismatch("vector sizes differ");
    if (k.is_zero())
        return acc;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            acc[i] += k * v[i];
    return acc;
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("vector sizes differ");
    Vector r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] -= b[i];
    return r;
}

Vector operator*(const Scalar& k, const Vector& v)
{
    Vector r = v;
    for (auto& s : r)
        s *= k;
    return r;
}

std::string format_combination(const Vector& v, const GradedSpace& space)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        std::string coeff = v[i].to_short_string();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative)
            coeff.erase(0, 1);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coeff != "1")
            out += coeff + " ";
        out += space.name(i);
    }
    return out.empty() ? "0" : out;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch("matrix with " + std::to_string(cols_) + " columns applied to vector of size "
                                + std::to_string(v.size()));
    auto r = zero_vector(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero())
            continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const auto& a = (*this)(i, j);
            if (!a.is_zero())
                r[i] += a * v[j];
        }
    }
    return r;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix shapes differ");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= o.data_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch("matrix product: inner dimensions " + std::to_string(a.cols_) + " and "
                                + std::to_string(b.rows_));
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    r(i, j) += x * b(k, j);
        }
    return r;
}

Matrix operator*(const Scalar& k, Matrix a)
{
    for (auto& s : a.data_)
        s *= k;
    return a;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Row-reduces `m` in place, mirroring every row operation on `aug`; returns the rank.
std::size_t gauss_jordan(Matrix& m, Matrix* aug)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m(pivot, col).is_zero())
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(pivot, j), m(rank, j));
            if (aug)
                for (std::size_t j = 0; j < aug->cols(); ++j)
                    std::swap((*aug)(pivot, j), (*aug)(rank, j));
        }
        const Scalar inv = m(rank, col).inverse();
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(rank, j) *= inv;
        if (aug)
            for (std::size_t j = 0; j < aug->cols(); ++j)
                (*aug)(rank, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col).is_zero())
                continue;
            const Scalar f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
            if (aug)
                for (std::size_t j = 0; j < aug->cols(); ++j)
                    (*aug)(i, j) -= f * (*aug)(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace

Matrix invert(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("cannot invert a non-square matrix");
    Matrix work = m;
    Matrix inv = Matrix::identity(m.field(), m.rows());
    if (gauss_jordan(work, &inv) != m.rows())
        throw SingularMap("matrix is singular");
    return inv;
}

std::size_t rank(Matrix m)
{
    return gauss_jordan(m, nullptr);
}

EvenLinearMap::EvenLinearMap(GradedSpace source, GradedSpace target, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m))
{
    if (m_.rows() != target_.dim() || m_.cols() != source_.dim())
        throw DimensionMismatch("map matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols())
                                + " but spaces have dimensions " + std::to_string(target_.dim()) + " and "
                                + std::to_string(source_.dim()));
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (target_.parity(i) != source_.parity(j) && !m_(i, j).is_zero())
                throw ParityViolation("map sends " + source_.name(j) + " (" + parity_name(source_.parity(j))
                                      + ") onto " + target_.name(i) + " (" + parity_name(target_.parity(i)) + ")");
}

EvenLinearMap EvenLinearMap::identity(Field f, const GradedSpace& space)
{
    return EvenLinearMap(space, space, Matrix::identity(f, space.dim()));
}

EvenLinearMap EvenLinearMap::zero(Field f, const GradedSpace& source, const GradedSpace& target)
{
    return EvenLinearMap(source, target, Matrix(f, target.dim(), source.dim()));
}

Vector EvenLinearMap::apply(const Vector& v) const
{
    return m_.apply(v);
}

EvenLinearMap compose(const EvenLinearMap& f, const EvenLinearMap& g)
{
    if (!(g.target() == f.source()))
        throw DimensionMismatch("composition: target of the inner map is not the source of the outer map");
    return EvenLinearMap(g.source(), f.target(), f.matrix() * g.matrix());
}

EvenLinearMap operator+(const EvenLinearMap& f, const EvenLinearMap& g)
{
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw DimensionMismatch("sum of maps between different spaces");
    return EvenLinearMap(f.source(), f.target(), f.matrix() + g.matrix());
}

EvenLinearMap operator*(const Scalar& k, const EvenLinearMap& f)
{
    return EvenLinearMap(f.source(), f.target(), k * f.matrix());
}

EvenLinearMap dual_transpose(const EvenLinearMap& f)
{
    return EvenLinearMap(f.target().dual(), f.source().dual(), f.matrix().transpose());
}

EvenLinearMap invert_even_map(const EvenLinearMap& f)
{
    if (f.source().dim() != f.target().dim())
        throw DimensionMismatch("cannot invert a map between spaces of different dimension");
    return EvenLinearMap(f.target(), f.source(), invert(f.matrix()));
}

EvenLinearMap power(const EvenLinearMap& f, int k)
{
    if (!f.is_endomorphism())
        throw DimensionMismatch("power of a non-endomorphism");
    const EvenLinearMap base = k < 0 ? invert_even_map(f) : f;
    auto r = EvenLinearMap::identity(f.field(), f.source());
    for (int i = 0; i < (k < 0 ? -k : k); ++i)
        r = compose(base, r);
    return r;
}

Scalar pair(const Vector& xi, const Vector& v)
{
    if (xi.size() != v.size())
        throw DimensionMismatch("pairing a dual vector of dimension " + std::to_string(xi.size())
                                + " with a vector of dimension " + std::to_string(v.size()));
    if (v.empty())
        return Scalar();
    Scalar r = Scalar::zero(v.front().field());
    for (std::size_t i = 0; i < v.size(); ++i)
        r += xi[i] * v[i];
    return r;
}

Scalar pair_reversed(const GradedSpace& space, const Vector& v, const Vector& xi)
{
    if (xi.size() != v.size() || v.size() != space.dim())
        throw DimensionMismatch("reversed pairing: dimensions differ");
    if (v.empty())
        return Scalar();
    Scalar r = Scalar::zero(v.front().field());
    for (std::size_t i = 0; i < v.size(); ++i)
        r += koszul_sign(space.parity(i), space.parity(i)) * (xi[i] * v[i]);
    return r;
}

Scalar pair_tensor(const GradedSpace& space, const Matrix& xi, const Matrix& t)
{
    const std::size_t n = space.dim();
    if (xi.rows() != n || xi.cols() != n || t.rows() != n || t.cols() != n)
        throw DimensionMismatch("tensor pairing: dimensions differ");
    Scalar r = Scalar::zero(t.field());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!xi(a, b).is_zero() && !t(a, b).is_zero())
                r += koszul_sign(space.parity(b), space.parity(a)) * (xi(a, b) * t(a, b));
    return r;
}

} // namespace hsw
