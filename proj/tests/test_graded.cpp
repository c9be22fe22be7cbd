#include "doctest.h"

#include "common.hpp"
#include "hsw/graded.hpp"

using namespace hsw;
using testing::q;

TEST_SUITE("graded") {

TEST_CASE("rational scalars are exact")
{
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(3, 4) * q(2, 3)).to_string() == "1/2");
    CHECK(q(-3, 4).to_string() == "-3/4");
    CHECK(q(6, 3).to_string() == "2");
    CHECK_THROWS_AS(q(1) / q(0), DivisionByZero);
}

TEST_CASE("prime field residues")
{
    const auto f = Field::prime(3);
    const auto two = Scalar::from_int(f, 2);
    CHECK(two * two == Scalar::one(f));
    CHECK(two.inverse() == two);
    CHECK(Scalar::from_int(f, -1) == two);
    CHECK(two.to_string() == "2 mod 3");
    CHECK(Scalar::from_rational(f, mpq_class(1, 2)) == two);
    CHECK_THROWS_AS(Scalar::from_rational(f, mpq_class(1, 3)), DivisionByZero);
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK(f.token() == "gf3");
    CHECK(f.name() == "GF(3)");
}

TEST_CASE("scalars from different fields do not mix")
{
    CHECK_THROWS_AS(Scalar::one(Field::prime(3)) + Scalar::one(Field::prime(5)), FieldMismatch);
    CHECK_THROWS_AS(Scalar::one(Field::prime(3)) * q(1, 2), FieldMismatch);
}

TEST_CASE("parse_scalar accepts both spellings")
{
    CHECK(parse_scalar(Field::rationals(), "-3/4") == q(-3, 4));
    CHECK(parse_scalar(Field::prime(5), "3 mod 5") == Scalar::from_int(Field::prime(5), 3));
    CHECK_THROWS_AS(parse_scalar(Field::prime(5), "3 mod 7"), FieldMismatch);
    CHECK_THROWS_AS(parse_scalar(Field::rationals(), "x"), Error);
}

TEST_CASE("Koszul sign")
{
    CHECK(koszul_sign(Parity::odd, Parity::odd) == -1);
    CHECK(koszul_sign(Parity::odd, Parity::even) == 1);
    CHECK(koszul_sign(Parity::even, Parity::even) == 1);
    CHECK(Parity::odd + Parity::odd == Parity::even);
}

TEST_CASE("graded spaces")
{
    const auto v = GradedSpace::with_dims(2, 1);
    CHECK(v.dim() == 3);
    CHECK(v.signature() == "2|1");
    CHECK(v.parity(2) == Parity::odd);
    const GradedSpace w({Parity::even, Parity::odd}, {"e", "x"});
    const auto s = w.direct_sum(w);
    CHECK(s.dim() == 4);
    CHECK(s.index_of("e") == 0);
    CHECK(s.name(2) != "e");
    CHECK(w.dual().name(1) == "x*");
    CHECK(format_combination({q(2), q(-1, 4)}, w) == "2 e - 1/4 x");
    CHECK(format_combination({q(0), q(-1)}, w) == "-x");
    CHECK(format_combination({q(0), q(0)}, w) == "0");
}

TEST_CASE("matrix inverse and rank")
{
    const auto f = Field::rationals();
    Matrix m(f, 2, 2);
    m(0, 0) = q(1);
    m(0, 1) = q(2);
    m(1, 0) = q(3);
    m(1, 1) = q(4);
    const auto inv = invert(m);
    CHECK(m * inv == Matrix::identity(f, 2));
    CHECK(inv(0, 0) == q(-2));
    CHECK(inv(1, 0) == q(3, 2));
    CHECK(rank(m) == 2);
    Matrix s(f, 2, 2);
    s(0, 0) = q(1);
    s(0, 1) = q(2);
    s(1, 0) = q(2);
    s(1, 1) = q(4);
    CHECK(rank(s) == 1);
    CHECK_THROWS_AS(invert(s), SingularMap);
}

TEST_CASE("even maps reject parity mixing")
{
    const auto f = Field::rationals();
    const GradedSpace w({Parity::even, Parity::odd}, {"e", "x"});
    Matrix m(f, 2, 2);
    m(1, 0) = q(1);
    CHECK_THROWS_AS(EvenLinearMap(w, w, m), ParityViolation);
    Matrix d = Matrix::identity(f, 2);
    d(1, 1) = q(3);
    const EvenLinearMap phi(w, w, d);
    CHECK(invert_even_map(phi).matrix()(1, 1) == q(1, 3));
    CHECK(power(phi, -2).matrix()(1, 1) == q(1, 9));
    CHECK(compose(phi, phi) == power(phi, 2));
}

} // TEST_SUITE
