#pragma once

#include "hsw/graded.hpp"
#include "hsw/superalgebra.hpp"

namespace hsw::builtin {

/// Kaplansky superalgebra K3 = <e | x, y>: e·e = e, e·x = x/2, e·y = y/2, x·y = e, α = id.
SuperAlgebra k3(Field f = Field::rationals());

/// e ↦ e, x ↦ x/c, y ↦ y/c (the twist given for the twisted K3 example).
EvenLinearMap k3_listed_twist(const Scalar& c);

/// e ↦ e, x ↦ c·x, y ↦ y/c; an automorphism of K3 for every c ≠ 0.
EvenLinearMap k3_morphism_twist(const Scalar& c);

/// Product e·e = e, e·x = x/(2c), e·y = y/(2c), x·y = e/c², twist k3_listed_twist(c).
SuperAlgebra k3_listed_twisted(const Scalar& c);

/// R(e) = 2e, R(x) = λy, R(y) = 0.
EvenLinearMap k3_rb_map(const Scalar& lambda);

/// Zero product on a 1|1 space with α = id.
SuperAlgebra zero_1_1(Field f);

} // namespace hsw::builtin
