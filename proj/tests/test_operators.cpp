#include "doctest.h"

#include "common.hpp"
#include "hsw/builtin.hpp"
#include "hsw/operators.hpp"
#include "hsw/workbench.hpp"
#include "hsw/ybe.hpp"

using namespace hsw;
using testing::q;

TEST_SUITE("operators") {

TEST_CASE("listed Rota-Baxter map fails at (e,e)")
{
    const auto a = builtin::k3_listed_twisted(q(2));
    const auto r = builtin::k3_rb_map(q(3));
    const auto rb = check_rota_baxter(a, r);
    REQUIRE_FALSE(rb.passed());
    const auto& w = rb.witnesses().front();
    CHECK(w.tuple == std::vector<std::string>{"e", "e"});
    CHECK(w.lhs_text() == "4 e");
    CHECK(w.rhs_text() == "8 e");

    const OOperatorCandidate cand(r, adjoint_rep(a));
    CHECK_FALSE(graph_is_subalgebra(cand).passed());
    CHECK_FALSE(nijenhuis_check(semidirect(cand.rep), nijenhuis_of(cand)).passed());
    CHECK_FALSE(hjybe_residual(lift_o_operator(cand)).is_zero());
    CHECK_THROWS_AS(induced_prejordan(cand), NotAnOOperator);
}

TEST_CASE("Rota-Baxter product table at c = 2, lambda = 3")
{
    const auto p = rb_prejordan(builtin::k3_listed_twisted(q(2)), builtin::k3_rb_map(q(3)));
    const auto& sp = p.space();
    CHECK(format_combination(p.mul_basis(0, 0), sp) == "2 e");
    CHECK(format_combination(p.mul_basis(0, 1), sp) == "1/2 x");
    CHECK(format_combination(p.mul_basis(0, 2), sp) == "1/2 y");
    CHECK(format_combination(p.mul_basis(1, 0), sp) == "3/4 y");
    CHECK(format_combination(p.mul_basis(1, 1), sp) == "-3/4 e");
    for (auto [i, j] : {std::pair{1, 2}, {2, 0}, {2, 1}, {2, 2}})
        CHECK(is_zero(p.mul_basis(i, j)));
}

TEST_CASE("zero map is an O-operator for every module")
{
    const auto k3 = builtin::k3();
    const auto adj = adjoint_rep(k3);
    const OOperatorCandidate zero(EvenLinearMap::zero(k3.field(), k3.space(), k3.space()), adj);
    CHECK(check_o_operator(zero).passed());
    CHECK(graph_is_subalgebra(zero).passed());
    CHECK(nijenhuis_check(semidirect(adj), nijenhuis_of(zero)).passed());
    const auto induced = induced_prejordan(zero);
    CHECK(induced.product().is_zero());
    CHECK(induced_homomorphism_report(zero).passed());
}

TEST_CASE("identity is an O-operator for the left multiplication module")
{
    const auto p = rb_prejordan(builtin::k3_listed_twisted(q(2)), builtin::k3_rb_map(q(3)));
    const auto lm = left_mult_rep(p);
    const OOperatorCandidate id(EvenLinearMap::identity(p.field(), p.space()), lm);
    CHECK(check_o_operator(id).passed());
    CHECK(compatible_prejordan(id) == p);
    CHECK(induced_prejordan(id) == p);
}

TEST_CASE("O-operators on the GF(3) fixture")
{
    const auto wb = load_workbench(testing::fixture("gf3.alg"));
    const auto& coadj = wb.rep("coadj");
    const auto f = wb.field;
    const auto& sp = coadj.space();
    const auto& j = coadj.base().space();
    Matrix m(f, 2, 2);
    m(0, 0) = Scalar::one(f);
    const OOperatorCandidate t(EvenLinearMap(sp, j, m), coadj);
    const bool o = check_o_operator(t).passed();
    CHECK(o == graph_is_subalgebra(t).passed());
    CHECK(o == nijenhuis_check(semidirect(coadj), nijenhuis_of(t)).passed());
    CHECK(o == hjybe_residual(lift_o_operator(t)).is_zero());
}

TEST_CASE("candidate shape is validated")
{
    const auto k3 = builtin::k3();
    const auto z = builtin::zero_1_1(k3.field());
    CHECK_THROWS_AS(OOperatorCandidate(EvenLinearMap::identity(k3.field(), z.space()), adjoint_rep(k3)),
                    DimensionMismatch);
}

} // TEST_SUITE
