#include "hsw/ybe.hpp"

#include <algorithm>
#include <utility>

#include "hsw/representation.hpp"

namespace hsw {

namespace {

void require_even_matrix(const GradedSpace& sp, const Matrix& m, const char* what)
{
    if (m.rows() != sp.dim() || m.cols() != sp.dim())
        throw DimensionMismatch(std::string(what) + " has the wrong shape");
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j)
            if (sp.parity(i) != sp.parity(j) && !m(i, j).is_zero())
                throw ParityViolation(std::string(what) + " is not even: entry (" + sp.name(i) + ", " + sp.name(j)
                                      + ") mixes parities");
}

int sgn(const GradedSpace& sp, std::size_t i, std::size_t j)
{
    return koszul_sign(sp.parity(i), sp.parity(j));
}

} // namespace

TensorElement::TensorElement(SuperAlgebra algebra, Matrix coefficients)
    : algebra_(std::move(algebra)), r_(std::move(coefficients))
{
    require_even_matrix(algebra_.space(), r_, "tensor");
}

TensorElement TensorElement::zero(const SuperAlgebra& algebra)
{
    return TensorElement(algebra, Matrix(algebra.field(), algebra.dim(), algebra.dim()));
}

bool TensorElement::is_alpha_stable() const
{
    const auto& a = algebra_.twist().matrix();
    return a * r_ * a.transpose() == r_;
}

bool TensorElement::is_skew() const
{
    return sigma(*this).coefficients() == -1 * Scalar::one(algebra_.field()) * r_;
}

Tensor3::Tensor3(Field f, std::size_t n) : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)) {}

bool Tensor3::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

void Tensor3::add_outer(const Scalar& k, const Vector& u, const Vector& v, const Vector& w)
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (u[i].is_zero())
            continue;
        const Scalar ki = k * u[i];
        for (std::size_t j = 0; j < n_; ++j) {
            if (v[j].is_zero())
                continue;
            const Scalar kij = ki * v[j];
            for (std::size_t l = 0; l < n_; ++l)
                if (!w[l].is_zero())
                    (*this)(i, j, l) += kij * w[l];
        }
    }
}

BilinearForm::BilinearForm(SuperAlgebra algebra, Matrix b) : algebra_(std::move(algebra)), b_(std::move(b))
{
    require_even_matrix(algebra_.space(), b_, "bilinear form");
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const
{
    auto s = Scalar::zero(algebra_.field());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero())
                s += x[i] * b_(i, j) * y[j];
    }
    return s;
}

bool BilinearForm::is_nondegenerate() const
{
    return rank(b_) == b_.rows();
}

bool BilinearForm::is_supersymmetric() const
{
    const auto& sp = algebra_.space();
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j)
            if (b_(i, j) != sgn(sp, i, j) * b_(j, i))
                return false;
    return true;
}

bool BilinearForm::is_super_skew() const
{
    const auto& sp = algebra_.space();
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j)
            if (b_(i, j) != -sgn(sp, i, j) * b_(j, i))
                return false;
    return true;
}

TensorElement sigma(const TensorElement& t)
{
    const auto& sp = t.algebra().space();
    Matrix s(t.algebra().field(), t.dim(), t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j)
            s(j, i) = sgn(sp, i, j) * t(i, j);
    return TensorElement(t.algebra(), std::move(s));
}

EvenLinearMap tensor_map_bijection(const TensorElement& t)
{
    const auto& sp = t.algebra().space();
    Matrix m(t.algebra().field(), t.dim(), t.dim());
    // T_r(e^b) = Σ_i (−1)^{|e^b||e_b|} r[i][b] e_i
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t b = 0; b < t.dim(); ++b)
            m(i, b) = sgn(sp, b, b) * t(i, b);
    return EvenLinearMap(sp.dual(), sp, std::move(m));
}

TensorElement map_to_tensor(const SuperAlgebra& a, const EvenLinearMap& t)
{
    const auto& sp = a.space();
    if (!(t.source() == sp.dual()) || !(t.target() == sp))
        throw DimensionMismatch("map does not go from the dual space to the algebra");
    Matrix r(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t b = 0; b < a.dim(); ++b)
            r(i, b) = sgn(sp, b, b) * t(i, b);
    return TensorElement(a, std::move(r));
}

Tensor3 hjybe_residual(const TensorElement& t)
{
    const auto& a = t.algebra();
    const auto& sp = a.space();
    const auto n = a.dim();
    const auto f = a.field();
    Tensor3 res(f, n);

    struct Term {
        std::size_t i, j;
        Scalar c;
    };
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!t(i, j).is_zero())
                terms.push_back({i, j, t(i, j)});
    std::vector<Vector> al;
    for (std::size_t i = 0; i < n; ++i)
        al.push_back(a.twist().image(i));

    const auto minus_one = -Scalar::one(f);
    for (const auto& [i1, j1, c1] : terms)
        for (const auto& [i2, j2, c2] : terms) {
            const Scalar c = c1 * c2;
            const Scalar signed_c = sgn(sp, i2, j1) * c;
            // r12·r13
            res.add_outer(signed_c, a.mul_basis(i1, i2), al[j1], al[j2]);
            // − r12·r23
            res.add_outer(minus_one * c, al[i1], a.mul_basis(j1, i2), al[j2]);
            // + r13·r23
            res.add_outer(signed_c, al[i1], al[i2], a.mul_basis(j1, j2));
        }
    return res;
}

CheckReport solution_cross_check(const TensorElement& t, bool stop_at_first)
{
    const auto co = coadjoint_rep(t.algebra());
    return check_o_operator(OOperatorCandidate(tensor_map_bijection(t), co), stop_at_first);
}

CheckReport is_solution(const TensorElement& t)
{
    CheckReport report("hjybe-solution");
    const auto& a = t.algebra();
    const auto& sp = a.space();
    const auto f = a.field();
    invert_even_map(a.twist());
    const auto n = a.dim();

    const auto s = sigma(t);
    for (std::size_t i = 0; i < n; ++i)
        expect_equal(report, "super-skew", {i}, {&sp}, s.coefficients().column(i),
                     -1 * Scalar::one(f) * t.coefficients().column(i), sp);

    const auto& am = a.twist().matrix();
    const Matrix twisted = am * t.coefficients() * am.transpose();
    for (std::size_t i = 0; i < n; ++i)
        expect_equal(report, "alpha-stability", {i}, {&sp}, twisted.column(i), t.coefficients().column(i), sp);

    const auto res = hjybe_residual(t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector v(n, Scalar::zero(f));
            for (std::size_t k = 0; k < n; ++k)
                v[k] = res(i, j, k);
            expect_equal(report, "residual", {i, j}, {&sp, &sp}, v, zero_vector(f, n), sp);
        }

    const bool cross = solution_cross_check(t, true).passed();
    report.note(std::string("coadjoint O-operator cross-check: ") + (cross ? "PASS" : "FAIL"));
    return report;
}

TensorElement lift_o_operator(const OOperatorCandidate& cand)
{
    const auto& rho = cand.rep;
    const auto b = semidirect(dual_rep(rho));
    const auto n = rho.base().dim();
    const auto m = rho.dim();
    Matrix t(rho.field(), n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < m; ++s)
            t(i, n + s) = cand.map(i, s);
    const TensorElement te(b, std::move(t));
    const auto st = sigma(te);
    return TensorElement(b, te.coefficients() - st.coefficients());
}

BilinearForm form_from_tensor(const TensorElement& t)
{
    const auto tinv = invert_even_map(tensor_map_bijection(t));
    // B(e_i, e_j) = ⟨T^{-1} e_i, e_j⟩ = (T^{-1})[j][i]
    return BilinearForm(t.algebra(), tinv.matrix().transpose());
}

CheckReport check_symplectic(const BilinearForm& b, bool stop_at_first)
{
    CheckReport report("symplectic");
    report.set_stop_at_first(stop_at_first);
    const auto& a = b.algebra();
    const auto& sp = a.space();
    const auto f = a.field();
    const auto n = a.dim();
    const auto& one = scalar_value_space();
    auto S = [&](const Scalar& s) { return Vector{s}; };

    if (!b.is_nondegenerate()) {
        Witness w;
        w.identity = "nondegeneracy";
        w.lhs = {Scalar::from_int(f, static_cast<long>(rank(b.matrix())))};
        w.rhs = {Scalar::from_int(f, static_cast<long>(n))};
        w.value_space = one;
        report.add(std::move(w));
    }
    for (std::size_t i = 0; i < n && !report.done(); ++i)
        for (std::size_t j = 0; j < n && !report.done(); ++j) {
            if (sp.parity(i) != sp.parity(j))
                expect_equal(report, "evenness", {i, j}, {&sp, &sp}, S(b.matrix()(i, j)), S(Scalar::zero(f)), one);
            expect_equal(report, "super-skew", {i, j}, {&sp, &sp}, S(b.matrix()(i, j)),
                         S(-sgn(sp, i, j) * b.matrix()(j, i)), one);
        }
    std::vector<Vector> al;
    for (std::size_t i = 0; i < n; ++i)
        al.push_back(a.twist().image(i));
    for (std::size_t i = 0; i < n && !report.done(); ++i)
        for (std::size_t j = 0; j < n && !report.done(); ++j)
            expect_equal(report, "alpha-invariance", {i, j}, {&sp, &sp}, S(b(al[i], al[j])), S(b.matrix()(i, j)),
                         one);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (report.done())
                    return report;
                const Scalar lhs = b(a.mul_basis(x, y), al[z]);
                const Scalar rhs = b(al[x], a.mul_basis(y, z))
                                   + koszul_sign(sp.parity(x), sp.parity(y) + sp.parity(z))
                                         * b(al[y], a.mul_basis(z, x));
                expect_equal(report, "cocycle", {x, y, z}, {&sp, &sp, &sp}, S(lhs), S(rhs), one);
            }
    return report;
}

SuperAlgebra prejordan_from_form(const SuperAlgebra& j, const BilinearForm& b, int sign)
{
    if (sign != 1 && sign != -1)
        throw Error("sign must be +1 or -1");
    const auto report = check_symplectic(b, true);
    if (!report.passed())
        throw NotSymplectic("form is not symplectic: " + report.witnesses().front().identity + " fails");
    const auto& sp = j.space();
    const auto n = j.dim();
    const auto f = j.field();
    // w^T (B A) = rhs^T  ⇔  (B A)^T w = rhs
    const Matrix system_inv = invert((b.matrix() * j.twist().matrix()).transpose());
    ProductTensor c(f, n);
    std::vector<Vector> al;
    for (std::size_t i = 0; i < n; ++i)
        al.push_back(j.twist().image(i));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vector rhs(n, Scalar::zero(f));
            for (std::size_t z = 0; z < n; ++z)
                rhs[z] = (sign * sgn(sp, x, y)) * b(al[y], j.mul_basis(x, z));
            const auto w = system_inv.apply(rhs);
            for (std::size_t k = 0; k < n; ++k)
                c(x, y, k) = w[k];
        }
    return SuperAlgebra(sp, std::move(c), j.twist(), j.label() + ".from-form");
}

} // namespace hsw
