#include "hsw/operators.hpp"

#include <utility>

namespace hsw {

OOperatorCandidate::OOperatorCandidate(EvenLinearMap t, Representation r) : map(std::move(t)), rep(std::move(r))
{
    if (!(map.source() == rep.space()) || !(map.target() == rep.base().space()))
        throw DimensionMismatch("O-operator candidate must map the module space into the base algebra");
}

CheckReport check_o_operator(const OOperatorCandidate& cand, bool stop_at_first)
{
    CheckReport report("o-operator");
    report.set_stop_at_first(stop_at_first);
    const auto& t = cand.map;
    const auto& rho = cand.rep;
    const auto& j = rho.base();
    const auto& vs = rho.space();
    const auto f = rho.field();

    const Matrix at = j.twist().matrix() * t.matrix();
    const Matrix tb = t.matrix() * rho.twist().matrix();
    for (std::size_t u = 0; u < vs.dim() && !report.done(); ++u)
        expect_equal(report, "twist-intertwining", {u}, {&vs}, at.column(u), tb.column(u), j.space());

    std::vector<Vector> tu;
    std::vector<Matrix> ptu;
    for (std::size_t u = 0; u < vs.dim(); ++u) {
        tu.push_back(t.image(u));
        ptu.push_back(rho.action_of(tu.back()));
    }
    for (std::size_t u = 0; u < vs.dim(); ++u)
        for (std::size_t v = 0; v < vs.dim(); ++v) {
            if (report.done())
                return report;
            auto inner = ptu[u].column(v);
            add_scaled(inner, Scalar::from_int(f, koszul_sign(vs.parity(u), vs.parity(v))), ptu[v].column(u));
            expect_equal(report, "o-operator-identity", {u, v}, {&vs, &vs}, j.mul(tu[u], tu[v]), t.apply(inner),
                         j.space());
        }
    return report;
}

CheckReport check_rota_baxter(const SuperAlgebra& a, const EvenLinearMap& r, bool stop_at_first)
{
    auto report = check_o_operator(OOperatorCandidate(r, adjoint_rep(a)), stop_at_first);
    CheckReport out("rota-baxter");
    out.set_stop_at_first(stop_at_first);
    out.merge(report);
    return out;
}

CheckReport graph_is_subalgebra(const OOperatorCandidate& cand, bool stop_at_first)
{
    CheckReport report("graph-subalgebra");
    report.set_stop_at_first(stop_at_first);
    const auto& t = cand.map;
    const auto& rho = cand.rep;
    const auto b = semidirect(rho);
    const auto n = rho.base().dim();
    const auto m = rho.dim();
    const auto& vs = rho.space();
    const auto f = rho.field();

    auto graph_element = [&](std::size_t u) {
        auto g = zero_vector(f, n + m);
        const auto tu = t.image(u);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = tu[i];
        g[n + u] = Scalar::one(f);
        return g;
    };
    // Membership: the J-part equals T of the V-part.
    auto check_member = [&](const std::string& identity, std::vector<std::size_t> idx,
                            std::vector<const GradedSpace*> spaces, const Vector& w) {
        const Vector jpart(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
        const Vector vpart(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
        expect_equal(report, identity, idx, spaces, jpart, t.apply(vpart), rho.base().space());
    };

    std::vector<Vector> g;
    for (std::size_t u = 0; u < m; ++u)
        g.push_back(graph_element(u));
    for (std::size_t u = 0; u < m && !report.done(); ++u)
        check_member("twist-stability", {u}, {&vs}, b.apply_twist(g[u]));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            if (report.done())
                return report;
            check_member("closure", {u, v}, {&vs, &vs}, b.mul(g[u], g[v]));
        }
    return report;
}

CheckReport nijenhuis_check(const SuperAlgebra& a, const EvenLinearMap& nmap, bool stop_at_first)
{
    CheckReport report("nijenhuis");
    report.set_stop_at_first(stop_at_first);
    const auto& sp = a.space();
    if (!(nmap.source() == sp) || !(nmap.target() == sp))
        throw DimensionMismatch("Nijenhuis candidate is not an endomorphism of the algebra's space");
    const Matrix na = nmap.matrix() * a.twist().matrix();
    const Matrix an = a.twist().matrix() * nmap.matrix();
    for (std::size_t x = 0; x < a.dim() && !report.done(); ++x)
        expect_equal(report, "twist-commutation", {x}, {&sp}, na.column(x), an.column(x), sp);
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
            if (report.done())
                return report;
            const auto nx = nmap.image(x);
            const auto ny = nmap.image(y);
            auto inner = a.mul(nx, a.basis(y)) + a.mul(a.basis(x), ny) - nmap.apply(a.mul_basis(x, y));
            expect_equal(report, "nijenhuis-identity", {x, y}, {&sp, &sp}, a.mul(nx, ny), nmap.apply(inner), sp);
        }
    return report;
}

EvenLinearMap nijenhuis_of(const OOperatorCandidate& cand)
{
    const auto& rho = cand.rep;
    const auto n = rho.base().dim();
    const auto m = rho.dim();
    const auto f = rho.field();
    auto space = rho.base().space().direct_sum(rho.space());
    Matrix mat(f, n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < m; ++b)
            mat(i, n + b) = -cand.map(i, b);
    return EvenLinearMap(space, space, std::move(mat));
}

namespace {

ProductTensor induced_tensor(const OOperatorCandidate& cand)
{
    const auto& rho = cand.rep;
    const auto m = rho.dim();
    ProductTensor c(rho.field(), m);
    for (std::size_t a = 0; a < m; ++a) {
        const Matrix pa = rho.action_of(cand.map.image(a));
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t q = 0; q < m; ++q)
                c(a, b, q) = pa(q, b);
    }
    return c;
}

void require_o_operator(const OOperatorCandidate& cand)
{
    const auto report = check_o_operator(cand, true);
    if (!report.passed()) {
        const auto& w = report.witnesses().front();
        std::string where;
        for (const auto& s : w.tuple)
            where += (where.empty() ? "" : ",") + s;
        throw NotAnOOperator("map is not an O-operator: " + w.identity + " fails at (" + where + "): "
                             + w.lhs_text() + " vs " + w.rhs_text());
    }
}

} // namespace

SuperAlgebra induced_prejordan(const OOperatorCandidate& cand)
{
    require_o_operator(cand);
    return SuperAlgebra(cand.rep.space(), induced_tensor(cand), cand.rep.twist(), "induced(" + cand.rep.label() + ")");
}

CheckReport induced_homomorphism_report(const OOperatorCandidate& cand, bool stop_at_first)
{
    CheckReport report("induced-homomorphism");
    report.set_stop_at_first(stop_at_first);
    const auto& rho = cand.rep;
    const auto& vs = rho.space();
    const SuperAlgebra star(vs, induced_tensor(cand), rho.twist());
    const auto jordan = plus_product(star);
    const auto& j = rho.base();
    for (std::size_t u = 0; u < vs.dim(); ++u)
        for (std::size_t v = 0; v < vs.dim(); ++v) {
            if (report.done())
                return report;
            expect_equal(report, "homomorphism", {u, v}, {&vs, &vs}, cand.map.apply(jordan.mul_basis(u, v)),
                         j.mul(cand.map.image(u), cand.map.image(v)), j.space());
        }
    return report;
}

SuperAlgebra rb_prejordan(const SuperAlgebra& a, const EvenLinearMap& r)
{
    if (!(r.source() == a.space()) || !(r.target() == a.space()))
        throw DimensionMismatch("Rota-Baxter candidate is not an endomorphism of the algebra's space");
    const auto n = a.dim();
    ProductTensor c(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t mm = 0; mm < n; ++mm) {
            if (r(mm, i).is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    c(i, j, k) += r(mm, i) * a.product()(mm, j, k);
        }
    return SuperAlgebra(a.space(), std::move(c), a.twist(), a.label() + ".rb");
}

SuperAlgebra compatible_prejordan(const OOperatorCandidate& cand)
{
    require_o_operator(cand);
    const auto t_inv = invert_even_map(cand.map);
    const auto& rho = cand.rep;
    const auto& j = rho.base();
    const auto n = j.dim();
    ProductTensor c(j.field(), n);
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix m = cand.map.matrix() * rho.action(x) * t_inv.matrix();
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k)
                c(x, y, k) = m(k, y);
    }
    return SuperAlgebra(j.space(), std::move(c), j.twist(), j.label() + ".compatible");
}

} // namespace hsw
