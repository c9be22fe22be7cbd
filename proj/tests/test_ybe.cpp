#include "doctest.h"

#include "common.hpp"
#include "hsw/builtin.hpp"
#include "hsw/search.hpp"
#include "hsw/workbench.hpp"
#include "hsw/ybe.hpp"

using namespace hsw;
using testing::q;

TEST_SUITE("ybe") {

TEST_CASE("tensors must be even")
{
    const auto k3 = builtin::k3();
    Matrix m(k3.field(), 3, 3);
    m(0, 1) = q(1);
    CHECK_THROWS_AS(TensorElement(k3, m), ParityViolation);
}

TEST_CASE("sigma is an involution with the Koszul sign")
{
    const auto k3 = builtin::k3();
    Matrix m(k3.field(), 3, 3);
    m(1, 2) = q(1);
    const TensorElement t(k3, m);
    const auto s = sigma(t);
    CHECK(s(2, 1) == q(-1));
    CHECK(sigma(s) == t);
    Matrix k(k3.field(), 3, 3);
    k(1, 2) = q(1);
    k(2, 1) = q(1);
    CHECK(TensorElement(k3, k).is_skew());
}

TEST_CASE("tensor to map bijection")
{
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    const auto& r = wb.tensor("r");
    const auto t = tensor_map_bijection(r);
    CHECK(map_to_tensor(r.algebra(), t) == r);
}

TEST_CASE("invertible solution on T gives a symplectic form")
{
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    const auto& r = wb.tensor("r");
    CHECK(r.is_skew());
    CHECK(r.is_alpha_stable());
    CHECK(hjybe_residual(r).is_zero());
    const auto sol = is_solution(r);
    CHECK(sol.passed());
    CHECK(sol.notes().back() == "coadjoint O-operator cross-check: PASS");
    const auto b = form_from_tensor(r);
    CHECK(b.matrix() == wb.form("B").matrix());
    CHECK(check_symplectic(b).passed());
    CHECK(b.is_super_skew());
    CHECK_FALSE(b.is_supersymmetric());
}

TEST_CASE("pre-Jordan structure from the symplectic form")
{
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    const auto& b = wb.form("B");
    const auto p = prejordan_from_form(b.algebra(), b, 1);
    CHECK(check_class(p, AlgebraClass::hom_pre_jordan).passed());
    CHECK(plus_product(p).product() == b.algebra().product());
    const auto m = prejordan_from_form(b.algebra(), b, -1);
    CHECK_FALSE(plus_product(m).product() == b.algebra().product());
    CHECK_THROWS_AS(prejordan_from_form(b.algebra(), b, 2), Error);
}

TEST_CASE("degenerate forms are not symplectic")
{
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    const auto& t = wb.algebra("T");
    const BilinearForm zero(t, Matrix(t.field(), 3, 3));
    const auto r = check_symplectic(zero);
    CHECK_FALSE(r.passed());
    CHECK(r.witnesses().front().identity == "nondegeneracy");
    CHECK_THROWS_AS(prejordan_from_form(t, zero), NotSymplectic);
}

TEST_CASE("skew non-solutions give non-symplectic forms")
{
    // On the semidirect product of the GF(3) fixture with its adjoint module, no invertible
    // skew tensor solves the equation, and none of their forms is symplectic.
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    const auto s = semidirect(adjoint_rep(wb.algebra("S")));
    const SkewTensorUniverse u(s);
    std::size_t invertible = 0, symplectic = 0, invertible_solutions = 0;
    for (std::uint64_t i = 0; i < u.size(); ++i) {
        const auto r = u.at(i);
        if (rank(r.coefficients()) != r.dim())
            continue;
        ++invertible;
        const bool sol = r.is_alpha_stable() && hjybe_residual(r).is_zero();
        invertible_solutions += sol;
        symplectic += check_symplectic(form_from_tensor(r), true).passed();
    }
    CHECK(u.size() == 81);
    CHECK(invertible == 36);
    CHECK(invertible_solutions == 0);
    CHECK(symplectic == 0);
}

} // TEST_SUITE
