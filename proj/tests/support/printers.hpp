#pragma once

#include "doctest.h"
#include "sginv/laurent.hpp"

namespace doctest {
template <>
struct StringMaker<sginv::LaurentPoly> {
  static String convert(const sginv::LaurentPoly& p) { return sginv::to_string(p).c_str(); }
};
template <>
struct StringMaker<sginv::Integer> {
  static String convert(const sginv::Integer& n) { return n.str().c_str(); }
};
}  // namespace doctest
