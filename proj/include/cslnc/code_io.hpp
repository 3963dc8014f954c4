#pragma once

#include <string>
#include <string_view>

#include "cslnc/lift.hpp"
#include "cslnc/scalar_code.hpp"

namespace cslnc {

// Scalar codes:
//   scalar <L>
//   kernel <d> <e> <L coefficient bits, c_0 first>
std::string serialize_scalar_code(const ScalarCode& code);
ScalarCode parse_scalar_code(std::string_view text, const Network& net);

// Fractional codes:
//   code <L> <L'>
//   kernel <d> <e> <L coefficient bits>       circulant kernel
//   kmatrix <d> <e> <row> ... <row>           dense kernel, L rows of L bits
//   gs <source> <row> ...                     G_s
//   decoder <receiver> <row> ...              D_t
//   dblock <receiver> <i> <j> <L bits>        circulant block (i, j) of D_t(C_L)
// Blank lines and text after '#' are ignored. Edge indices are 0-based.
std::string serialize_code(const FractionalCode& code);
FractionalCode parse_code(std::string_view text, const Network& net);

}  // namespace cslnc
