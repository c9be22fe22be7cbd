#include "doctest.h"

#include "common.hpp"
#include "hsw/builtin.hpp"
#include "hsw/operators.hpp"
#include "hsw/representation.hpp"
#include "hsw/workbench.hpp"

using namespace hsw;
using testing::q;

TEST_SUITE("representation") {

TEST_CASE("adjoint and coadjoint modules of K3")
{
    const auto k3 = builtin::k3();
    const auto adj = adjoint_rep(k3);
    CHECK(adj.dim() == 3);
    CHECK(check_representation(adj).passed());
    CHECK(check_representation(coadjoint_rep(k3)).passed());
    CHECK(check_representation(dual_rep(adj)).passed());
    CHECK(check_dual_pairing(adj).passed());
}

TEST_CASE("coadjoint modules of Yau-twisted K3")
{
    const auto k3 = builtin::k3();
    for (const auto& c : {q(2), q(3), q(-1)}) {
        const auto t = yau_twist(k3, builtin::k3_morphism_twist(c));
        CHECK(check_representation(adjoint_rep(t)).passed());
        CHECK(check_representation(coadjoint_rep(t)).passed());
        CHECK(check_dual_pairing(adjoint_rep(t)).passed());
    }
}

TEST_CASE("semidirect product with and without the Koszul sign")
{
    const auto adj = adjoint_rep(builtin::k3());
    const auto s = semidirect(adj);
    CHECK(s.dim() == 6);
    CHECK(check_class(s, AlgebraClass::hom_jordan).passed());
    CHECK(check_class(s, AlgebraClass::multiplicative_twist).passed());
    const auto lit = check_class(semidirect(adj, SemidirectSign::literal), AlgebraClass::hom_jordan);
    CHECK_FALSE(lit.passed());
    CHECK(lit.witnesses().front().identity == "supercommutativity");
}

TEST_CASE("action parity is validated")
{
    const auto k3 = builtin::k3();
    const auto f = k3.field();
    const GradedSpace v({Parity::even}, {"v"});
    std::vector<Matrix> action(3, Matrix(f, 1, 1));
    action[1](0, 0) = q(1); // odd x acting on an even-only module must vanish
    CHECK_THROWS_AS(Representation(k3, v, action, EvenLinearMap::identity(f, v)), ParityViolation);
    CHECK_THROWS_AS(Representation(k3, v, std::vector<Matrix>(2, Matrix(f, 1, 1)), EvenLinearMap::identity(f, v)),
                    DimensionMismatch);
}

TEST_CASE("zero module")
{
    const auto k3 = builtin::k3();
    CHECK(check_representation(Representation::zero(k3, GradedSpace::with_dims(1, 1))).passed());
}

TEST_CASE("a twist that does not intertwine is caught")
{
    const auto k3 = builtin::k3();
    const auto f = k3.field();
    const auto adj = adjoint_rep(k3);
    Matrix b = Matrix::identity(f, 3);
    b(1, 1) = q(2);
    const Representation bad(k3, k3.space(), adj.action(), EvenLinearMap(k3.space(), k3.space(), b));
    const auto r = check_representation(bad, true);
    REQUIRE_FALSE(r.passed());
    CHECK(r.witnesses().front().identity == "twist-compatibility");
}

TEST_CASE("left multiplication module of a pre-Jordan algebra")
{
    const auto f = Field::rationals();
    const auto sp = GradedSpace::with_dims(1, 0);
    ProductTensor c(f, 1);
    c(0, 0, 0) = q(1);
    const SuperAlgebra p(sp, c, EvenLinearMap::identity(f, sp));
    const auto lm = left_mult_rep(p);
    CHECK(lm.base().mul_basis(0, 0) == std::vector<Scalar>{q(2)});
    CHECK(check_representation(lm).passed());
    const auto eq = left_mult_equivalence(p);
    CHECK(eq.passed());
    CHECK(eq.notes().front() == "hom-pre-jordan: PASS");
}

TEST_CASE("left multiplication equivalence on the Rota-Baxter product")
{
    const auto wb = load_workbench(testing::fixture("k3.alg"));
    const auto p = rb_prejordan(wb.algebra("K3a"), wb.map("R").map);
    const auto eq = left_mult_equivalence(p);
    CHECK(eq.passed());
    for (const auto& n : eq.notes())
        if (n.rfind("multiplicative", 0) != 0)
            CHECK(n.find("FAIL") != std::string::npos);
}

} // TEST_SUITE
