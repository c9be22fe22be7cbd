#include "doctest.h"

#include "common.hpp"
#include "hsw/builtin.hpp"
#include "hsw/search.hpp"
#include "hsw/superalgebra.hpp"

using namespace hsw;
using testing::q;

namespace {

const Witness& first_witness(const CheckReport& r)
{
    REQUIRE(!r.witnesses().empty());
    return r.witnesses().front();
}

} // namespace

TEST_SUITE("superalgebra") {

TEST_CASE("K3 is Hom-Jordan with identity twist")
{
    const auto k3 = builtin::k3();
    CHECK(k3.dim() == 3);
    CHECK(check_class(k3, AlgebraClass::supercommutative).passed());
    CHECK(check_class(k3, AlgebraClass::hom_jordan).passed());
    CHECK(check_class(k3, AlgebraClass::multiplicative_twist).passed());
    // Simple Jordan superalgebra, not associative.
    CHECK_FALSE(check_class(k3, AlgebraClass::hom_associative).passed());
}

TEST_CASE("listed twisted K3 table at c = 2")
{
    const auto a = builtin::k3_listed_twisted(q(2));
    CHECK(a.mul_basis(0, 1) == testing::vec(Field::rationals(), 3, 1, q(1, 4)));
    CHECK(a.mul_basis(0, 2) == testing::vec(Field::rationals(), 3, 2, q(1, 4)));
    CHECK(a.mul_basis(1, 2) == testing::vec(Field::rationals(), 3, 0, q(1, 4)));
    CHECK(a.mul_basis(2, 1) == testing::vec(Field::rationals(), 3, 0, q(-1, 4)));
    CHECK(check_class(a, AlgebraClass::hom_jordan).passed());

    const auto mult = check_class(a, AlgebraClass::multiplicative_twist);
    REQUIRE_FALSE(mult.passed());
    const auto& w = first_witness(mult);
    CHECK(w.tuple == std::vector<std::string>{"x", "y"});
    CHECK(w.lhs_text() == "1/4 e");
    CHECK(w.rhs_text() == "1/16 e");
}

TEST_CASE("listed twist is not a morphism of K3")
{
    const auto k3 = builtin::k3();
    const auto r = check_morphism(k3, k3, builtin::k3_listed_twist(q(2)));
    REQUIRE_FALSE(r.passed());
    const auto& w = first_witness(r);
    CHECK(w.identity == "product-preservation");
    CHECK(w.tuple == std::vector<std::string>{"x", "y"});
    CHECK(w.lhs_text() == "e");
    CHECK(w.rhs_text() == "1/4 e");
    CHECK_THROWS_AS(yau_twist(k3, builtin::k3_listed_twist(q(2))), NotAMorphism);
    CHECK(yau_twist(k3, builtin::k3_listed_twist(q(2)), true) == builtin::k3_listed_twisted(q(2)));
}

TEST_CASE("corrected twist is an automorphism and its Yau twist is Hom-Jordan")
{
    const auto k3 = builtin::k3();
    for (const auto& c : {q(2), q(3), q(-1), q(1, 5)}) {
        const auto phi = builtin::k3_morphism_twist(c);
        CHECK(check_morphism(k3, k3, phi).passed());
        const auto t = yau_twist(k3, phi);
        CHECK(check_class(t, AlgebraClass::hom_jordan).passed());
        CHECK(check_class(t, AlgebraClass::multiplicative_twist).passed());
    }
}

TEST_CASE("odd products with the wrong parity are rejected")
{
    const auto f = Field::rationals();
    const GradedSpace sp({Parity::even, Parity::odd}, {"e", "x"});
    ProductTensor c(f, 2);
    c(0, 0, 1) = q(1);
    CHECK_THROWS_AS(SuperAlgebra(sp, c, EvenLinearMap::identity(f, sp)), ParityViolation);
}

TEST_CASE("supercommutativity witness")
{
    const auto f = Field::rationals();
    const GradedSpace sp({Parity::even, Parity::odd}, {"e", "x"});
    ProductTensor c(f, 2);
    c(0, 1, 1) = q(1);
    const SuperAlgebra a(sp, c, EvenLinearMap::identity(f, sp));
    const auto r = check_class(a, AlgebraClass::supercommutative);
    REQUIRE_FALSE(r.passed());
    CHECK(first_witness(r).tuple == std::vector<std::string>{"e", "x"});
    CHECK(check_class(plus_product(a), AlgebraClass::supercommutative).passed());
}

TEST_CASE("class names round trip")
{
    for (auto c : {AlgebraClass::supercommutative, AlgebraClass::hom_jordan, AlgebraClass::hom_associative,
                   AlgebraClass::hom_alternative, AlgebraClass::hom_pre_jordan, AlgebraClass::multiplicative_twist})
        CHECK(parse_algebra_class(class_name(c)) == c);
    CHECK(parse_algebra_class("hom-jordan") == AlgebraClass::hom_jordan);
    CHECK_FALSE(parse_algebra_class("jordan").has_value());
    CHECK(parse_dendriform_class("hom-dendriform") == DendriformClass::hom_dendriform);
}

TEST_CASE("zero algebras satisfy every class")
{
    const auto z = builtin::zero_1_1(Field::rationals());
    for (auto c : {AlgebraClass::hom_jordan, AlgebraClass::hom_associative, AlgebraClass::hom_alternative,
                   AlgebraClass::hom_pre_jordan, AlgebraClass::multiplicative_twist})
        CHECK(check_class(z, c).passed());
    CHECK(check_prejordan_expanded(z).passed());
    const auto empty = SuperAlgebra::zero(Field::rationals(), GradedSpace{});
    CHECK(check_class(empty, AlgebraClass::hom_jordan).passed());
}

TEST_CASE("associative algebras are alternative and their plus product is Jordan")
{
    // Matrix units e11, e12, e21, e22 with identity twist, all even.
    const auto f = Field::rationals();
    const auto sp = GradedSpace::with_dims(4, 0);
    ProductTensor c(f, 4);
    auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                c(idx(i, j), idx(j, l), idx(i, l)) = q(1);
    const SuperAlgebra m(sp, c, EvenLinearMap::identity(f, sp));
    CHECK(check_class(m, AlgebraClass::hom_associative).passed());
    CHECK(check_class(m, AlgebraClass::hom_alternative).passed());
    CHECK(check_class(plus_product(m), AlgebraClass::hom_jordan).passed());
}

TEST_CASE("dendriform splitting of an associative product")
{
    // One-dimensional: a ≺ a = a, a ≻ a = 0 gives star a·a = a.
    const auto f = Field::rationals();
    const auto sp = GradedSpace::with_dims(1, 0);
    ProductTensor l(f, 1), r(f, 1);
    l(0, 0, 0) = q(1);
    const DendriformAlgebra d(sp, l, r, EvenLinearMap::identity(f, sp));
    CHECK(check_dendriform_class(d, DendriformClass::hom_dendriform).passed());
    CHECK(check_dendriform_class(d, DendriformClass::hom_pre_alternative).passed());
    const auto p = dendriform_to_prejordan(d);
    CHECK(p.mul_basis(0, 0) == std::vector<Scalar>{q(1)});
    CHECK(check_class(p, AlgebraClass::hom_pre_jordan).passed());
    CHECK(check_class(prejordan_to_jordan(p), AlgebraClass::hom_jordan).passed());
}

TEST_CASE("pre-Jordan forms agree on multiplicative instances only")
{
    // Over GF(2) on 1|1 with full twist, the two forms disagree on some non-multiplicative
    // algebras and never on multiplicative ones.
    const AlgebraUniverse u(Field::prime(2), GradedSpace::with_dims(1, 1), TwistMode::full, false);
    std::size_t disagree = 0, disagree_mult = 0;
    for (std::uint64_t i = 0; i < u.size(); ++i) {
        const auto a = u.at(i);
        const bool differ = check_class(a, AlgebraClass::hom_pre_jordan, true).passed()
                            != check_prejordan_expanded(a, true).passed();
        disagree += differ;
        if (check_class(a, AlgebraClass::multiplicative_twist, true).passed())
            disagree_mult += differ;
    }
    CHECK(u.size() == 64);
    CHECK(disagree == 6);
    CHECK(disagree_mult == 0);
}

TEST_CASE("stop at first witness")
{
    const auto k3 = builtin::k3();
    const auto full = check_morphism(k3, k3, builtin::k3_listed_twist(q(2)));
    const auto first = check_morphism(k3, k3, builtin::k3_listed_twist(q(2)), true);
    CHECK(full.witnesses().size() == 2);
    CHECK(first.witnesses().size() == 1);
}

} // TEST_SUITE
