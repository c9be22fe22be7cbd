#pragma once

#include <string>

#include "hsw/graded.hpp"
#include "hsw/workbench.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(HSW_FIXTURE_DIR) + "/" + name; }

inline hsw::Scalar q(long n, long d = 1, hsw::Field f = hsw::Field::rationals())
{
    return hsw::Scalar::from_int(f, n) / hsw::Scalar::from_int(f, d);
}

inline hsw::Vector vec(hsw::Field f, std::size_t n, std::size_t i, const hsw::Scalar& k)
{
    auto v = hsw::zero_vector(f, n);
    v[i] = k;
    return v;
}

} // namespace testing
