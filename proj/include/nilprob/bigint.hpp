#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nilprob {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace nilprob
