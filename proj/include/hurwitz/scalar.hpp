#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

#include <limits>

namespace hk {

// Working-precision ladder for the templated core.
using Extended = long double;
using Quad = boost::multiprecision::float128;
using Mp50 = boost::multiprecision::cpp_bin_float_50;
using Mp100 = boost::multiprecision::cpp_bin_float_100;

template <class T>
T pi_v() {
    return boost::math::constants::pi<T>();
}

template <class T>
T eps_v() {
    return std::numeric_limits<T>::epsilon();
}

}  // namespace hk
