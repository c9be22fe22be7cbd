#include "hsw/builtin.hpp"

namespace hsw::builtin {

namespace {

GradedSpace k3_space()
{
    return GradedSpace({Parity::even, Parity::odd, Parity::odd}, {"e", "x", "y"});
}

EvenLinearMap diagonal(const GradedSpace& sp, const Scalar& a, const Scalar& b, const Scalar& c)
{
    Matrix m(a.field(), 3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return EvenLinearMap(sp, sp, std::move(m));
}

// Super-commutative K3-shaped product with e·e = ee, e·x = ex x, e·y = ex y, x·y = xy e.
SuperAlgebra k3_shape(const Scalar& ee, const Scalar& ex, const Scalar& xy, EvenLinearMap twist, std::string label)
{
    const auto f = ee.field();
    ProductTensor c(f, 3);
    c(0, 0, 0) = ee;
    c(0, 1, 1) = c(1, 0, 1) = ex;
    c(0, 2, 2) = c(2, 0, 2) = ex;
    c(1, 2, 0) = xy;
    c(2, 1, 0) = -xy;
    return SuperAlgebra(k3_space(), std::move(c), std::move(twist), std::move(label));
}

} // namespace

SuperAlgebra k3(Field f)
{
    const auto one = Scalar::one(f);
    return k3_shape(one, one / Scalar::from_int(f, 2), one, EvenLinearMap::identity(f, k3_space()), "K3");
}

EvenLinearMap k3_listed_twist(const Scalar& c)
{
    const auto one = Scalar::one(c.field());
    return diagonal(k3_space(), one, one / c, one / c);
}

EvenLinearMap k3_morphism_twist(const Scalar& c)
{
    const auto one = Scalar::one(c.field());
    return diagonal(k3_space(), one, c, one / c);
}

SuperAlgebra k3_listed_twisted(const Scalar& c)
{
    const auto f = c.field();
    const auto one = Scalar::one(f);
    return k3_shape(one, one / (Scalar::from_int(f, 2) * c), one / (c * c), k3_listed_twist(c), "K3_alpha");
}

EvenLinearMap k3_rb_map(const Scalar& lambda)
{
    const auto f = lambda.field();
    const auto sp = k3_space();
    Matrix m(f, 3, 3);
    m(0, 0) = Scalar::from_int(f, 2);
    m(2, 1) = lambda;
    return EvenLinearMap(sp, sp, std::move(m));
}

SuperAlgebra zero_1_1(Field f)
{
    return SuperAlgebra::zero(f, GradedSpace({Parity::even, Parity::odd}, {"e", "x"}), "Zero11");
}

} // namespace hsw::builtin
