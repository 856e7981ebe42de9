#pragma once

#include <string>
#include <string_view>

#include "finalg/algebra.hpp"

namespace finalg {

// Algebra file grammar:
//   # comment to end of line
//   algebra <name>
//   size <k>
//   op <name> <arity>
//   <k^arity whitespace-separated entries, row-major, first argument most
//    significant>
// Parse errors cite line:column. parse(print(a)) == a.
FiniteAlgebra parse_algebra(std::string_view text);
std::string print_algebra(const FiniteAlgebra& a);

// Partition block syntax over {0..n-1}: "0,1|2".
Partition parse_partition(std::string_view blocks, int universe_size);

}  // namespace finalg
