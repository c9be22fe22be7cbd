#include "hsw/representation.hpp"

#include <utility>

namespace hsw {

Representation::Representation(SuperAlgebra base, GradedSpace space, std::vector<Matrix> action, EvenLinearMap twist,
                               std::string label)
    : base_(std::move(base)), space_(std::move(space)), action_(std::move(action)), twist_(std::move(twist)),
      label_(std::move(label))
{
    const auto n = space_.dim();
    if (action_.size() != base_.dim())
        throw DimensionMismatch("representation has " + std::to_string(action_.size()) + " action matrices for a "
                                + std::to_string(base_.dim()) + "-dimensional base");
    if (!(twist_.source() == space_) || !(twist_.target() == space_))
        throw DimensionMismatch("module twist is not an endomorphism of the module space");
    for (std::size_t i = 0; i < action_.size(); ++i) {
        const auto& m = action_[i];
        if (m.rows() != n || m.cols() != n)
            throw DimensionMismatch("action matrix of " + base_.space().name(i) + " has the wrong shape");
        const auto pi = base_.space().parity(i);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (space_.parity(a) != space_.parity(b) + pi && !m(a, b).is_zero())
                    throw ParityViolation("action of " + base_.space().name(i) + " on " + space_.name(b)
                                          + " has a component along " + space_.name(a) + " of the wrong parity");
    }
}

Representation Representation::zero(const SuperAlgebra& base, GradedSpace space, std::string label)
{
    const auto f = base.field();
    const auto n = space.dim();
    std::vector<Matrix> action(base.dim(), Matrix(f, n, n));
    auto twist = EvenLinearMap::identity(f, space);
    return Representation(base, std::move(space), std::move(action), std::move(twist), std::move(label));
}

Matrix Representation::action_of(const Vector& x) const
{
    if (x.size() != action_.size())
        throw DimensionMismatch("element of the wrong dimension acting on a module");
    Matrix m(field(), dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            m += x[i] * action_[i];
    return m;
}

namespace {

// Records one witness per basis vector v of V on which the two operators differ.
void expect_equal_operators(CheckReport& report, const std::string& identity, std::vector<std::size_t> indices,
                            std::vector<const GradedSpace*> spaces, const Matrix& lhs, const Matrix& rhs,
                            const GradedSpace& module)
{
    if (lhs == rhs)
        return;
    indices.push_back(0);
    spaces.push_back(&module);
    for (std::size_t v = 0; v < module.dim() && !report.done(); ++v) {
        indices.back() = v;
        expect_equal(report, identity, indices, spaces, lhs.column(v), rhs.column(v), module);
    }
}

} // namespace

CheckReport check_representation(const Representation& rho, bool stop_at_first)
{
    CheckReport report("representation");
    report.set_stop_at_first(stop_at_first);
    const auto& j = rho.base();
    const auto n = j.dim();
    const auto f = rho.field();
    const auto* js = &j.space();
    const auto& vs = rho.space();
    const Matrix& beta = rho.twist().matrix();
    const Matrix beta2 = beta * beta;

    std::vector<Vector> a1, a2;
    std::vector<Matrix> p0, p1, p2;
    for (std::size_t i = 0; i < n; ++i) {
        a1.push_back(j.twist().image(i));
        a2.push_back(j.apply_twist(a1.back()));
        p0.push_back(rho.action(i));
        p1.push_back(rho.action_of(a1.back()));
        p2.push_back(rho.action_of(a2.back()));
    }

    for (std::size_t x = 0; x < n && !report.done(); ++x)
        expect_equal_operators(report, "twist-compatibility", {x}, {js}, beta * p0[x], p1[x] * beta, vs);

    // π(αx·αy) and π(x·y) for all basis pairs.
    std::vector<Matrix> pa(n * n), pm(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            pa[x * n + y] = rho.action_of(j.mul(a1[x], a1[y]));
            pm[x * n + y] = rho.action_of(j.mul_basis(x, y));
        }
    auto PA = [&](std::size_t x, std::size_t y) -> const Matrix& { return pa[x * n + y]; };
    auto PM = [&](std::size_t x, std::size_t y) -> const Matrix& { return pm[x * n + y]; };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                if (report.done())
                    return report;
                const auto px = js->parity(x), py = js->parity(y), pz = js->parity(z);
                auto S = [&](int s) { return Scalar::from_int(f, s); };
                const int sxz = koszul_sign(px, pz), sxy = koszul_sign(px, py), syz = koszul_sign(py, pz);

                const Matrix lhs = S(sxz) * (PA(x, y) * p1[z] * beta) + S(sxy) * (PA(y, z) * p1[x] * beta)
                                   + S(syz) * (PA(z, x) * p1[y] * beta);
                const Matrix rhs2 = S(sxz) * (p2[x] * PM(y, z) * beta) + S(sxy) * (p2[y] * PM(z, x) * beta)
                                    + S(syz) * (p2[z] * PM(x, y) * beta);
                const Matrix rhs3 = S(sxz) * (p2[x] * p1[y] * p0[z]) + S(sxy * syz) * (p2[z] * p1[y] * p0[x])
                                    + S(syz * sxz) * (rho.action_of(j.mul(j.mul_basis(x, z), a1[y])) * beta2);
                expect_equal_operators(report, "cubic-1", {x, y, z}, {js, js, js}, lhs, rhs2, vs);
                expect_equal_operators(report, "cubic-2", {x, y, z}, {js, js, js}, lhs, rhs3, vs);
            }
    return report;
}

Representation adjoint_rep(const SuperAlgebra& a)
{
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < a.dim(); ++i)
        action.push_back(a.left_multiplication(i));
    return Representation(a, a.space(), std::move(action), a.twist(), "ad(" + a.label() + ")");
}

SuperAlgebra semidirect(const Representation& rho, SemidirectSign sign)
{
    const auto& j = rho.base();
    const auto n = j.dim();
    const auto m = rho.dim();
    const auto f = rho.field();
    auto space = j.space().direct_sum(rho.space());
    ProductTensor c(f, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l)
                c(i, k, l) = j.product()(i, k, l);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t q = 0; q < m; ++q) {
                const auto& coeff = rho.action(i)(q, b);
                c(i, n + b, n + q) = coeff;
                if (sign == SemidirectSign::corrected)
                    c(n + b, i, n + q) = koszul_sign(rho.space().parity(b), j.space().parity(i)) * coeff;
            }
    Matrix t(f, n + m, n + m);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            t(r, s) = j.twist()(r, s);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s)
            t(n + r, n + s) = rho.twist()(r, s);
    EvenLinearMap twist(space, space, std::move(t));
    return SuperAlgebra(std::move(space), std::move(c), std::move(twist), j.label() + "⋉" + rho.label());
}

std::vector<Matrix> plain_dual_action(const Representation& rho)
{
    const auto& js = rho.base().space();
    const auto& vs = rho.space();
    const auto m = rho.dim();
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < js.dim(); ++i) {
        Matrix d(rho.field(), m, m);
        // π*(e_i)(e^a) = Σ_b s(|e_i|, |e^a|) P_i[a][b] e^b
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                d(b, a) = koszul_sign(js.parity(i), vs.parity(a)) * rho.action(i)(a, b);
        out.push_back(std::move(d));
    }
    return out;
}

Representation dual_rep(const Representation& rho)
{
    const auto& j = rho.base();
    invert_even_map(j.twist());
    const auto beta_inv = invert_even_map(rho.twist());
    const Matrix beta_inv2_t = (beta_inv.matrix() * beta_inv.matrix()).transpose();
    const auto plain = plain_dual_action(rho);
    const auto f = rho.field();
    const auto m = rho.dim();

    std::vector<Matrix> action;
    for (std::size_t i = 0; i < j.dim(); ++i) {
        const auto ax = j.twist().image(i);
        Matrix pa(f, m, m);
        for (std::size_t k = 0; k < ax.size(); ++k)
            if (!ax[k].is_zero())
                pa += ax[k] * plain[k];
        action.push_back(pa * beta_inv2_t);
    }
    return Representation(j, rho.space().dual(), std::move(action), dual_transpose(beta_inv),
                          rho.label() + "⋆");
}

CheckReport check_dual_pairing(const Representation& rho, bool stop_at_first)
{
    CheckReport report("dual-pairing");
    report.set_stop_at_first(stop_at_first);
    const auto& j = rho.base();
    const auto dual = dual_rep(rho);
    const auto alpha_inv = invert_even_map(j.twist());
    const auto beta_inv = invert_even_map(rho.twist());
    const Matrix beta_inv2 = beta_inv.matrix() * beta_inv.matrix();
    const auto m = rho.dim();
    const auto& js = j.space();
    const auto& vs = rho.space();
    const auto ds = vs.dual();
    for (std::size_t x = 0; x < j.dim(); ++x) {
        const Matrix inner = rho.action_of(alpha_inv.image(x)) * beta_inv2;
        for (std::size_t xi = 0; xi < m; ++xi)
            for (std::size_t u = 0; u < m; ++u) {
                if (report.done())
                    return report;
                // ⟨π⋆(x)ξ, u⟩ is entry (u, ξ) of π⋆(x); ⟨ξ, w⟩ is w's ξ-coordinate.
                const Scalar lhs = dual.action(x)(u, xi);
                const Scalar rhs = koszul_sign(js.parity(x), vs.parity(xi)) * inner(xi, u);
                expect_equal(report, "pairing", {x, xi, u}, {&js, &ds, &vs}, Vector{lhs}, Vector{rhs},
                             scalar_value_space());
            }
    }
    return report;
}

Representation coadjoint_rep(const SuperAlgebra& a)
{
    auto rho = dual_rep(adjoint_rep(a));
    return Representation(rho.base(), rho.space(), rho.action(), rho.twist(), "ad⋆(" + a.label() + ")");
}

Representation left_mult_rep(const SuperAlgebra& p)
{
    const auto j = prejordan_to_jordan(p);
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < p.dim(); ++i)
        action.push_back(p.left_multiplication(i));
    return Representation(j, p.space(), std::move(action), p.twist(), "L(" + p.label() + ")");
}

CheckReport left_mult_equivalence(const SuperAlgebra& p)
{
    CheckReport report("left-mult-equivalence");
    const bool pre_plain = check_class(p, AlgebraClass::hom_pre_jordan, true).passed();
    const bool mult = check_class(p, AlgebraClass::multiplicative_twist, true).passed();
    const bool pre = pre_plain && mult;
    const auto j = prejordan_to_jordan(p);
    const bool jordan = check_class(j, AlgebraClass::hom_jordan, true).passed();
    const bool module = check_representation(left_mult_rep(p), true).passed();
    report.note(std::string("hom-pre-jordan: ") + (pre_plain ? "PASS" : "FAIL"));
    report.note(std::string("multiplicative twist: ") + (mult ? "PASS" : "FAIL"));
    report.note(std::string("associated hom-jordan: ") + (jordan ? "PASS" : "FAIL"));
    report.note(std::string("left multiplication module: ") + (module ? "PASS" : "FAIL"));
    const bool rhs = jordan && module;
    if (pre != rhs) {
        Witness w;
        w.identity = "sides-disagree";
        w.lhs = {Scalar::from_int(p.field(), pre ? 1 : 0)};
        w.rhs = {Scalar::from_int(p.field(), rhs ? 1 : 0)};
        w.value_space = scalar_value_space();
        report.add(std::move(w));
    }
    return report;
}

} // namespace hsw
