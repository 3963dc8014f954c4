#pragma once

#include "cslnc/lift.hpp"
#include "cslnc/scalar_code.hpp"

namespace cslnc {

/// Degree-1 scalar solution of combination(4) over GF(16): k(e1, ru_j) = 1 for
/// all j, k(e2, ru_1) = 0, k(e2, ru_2) = 1, k(e2, ru_3) = alpha, k(e2, ru_4) =
/// alpha^2, and 1 at every u_j.
ScalarCode reference_combination4_code();

/// The (2,3)-fractional code on gen_example1() with its dense kernels, G_s and D_t.
FractionalCode reference_example1_code();

}  // namespace cslnc
