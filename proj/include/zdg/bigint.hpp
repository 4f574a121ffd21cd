#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zdg {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace zdg
