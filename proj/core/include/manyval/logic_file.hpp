#pragma once

#include <string>
#include <string_view>

#include "manyval/matrix.hpp"

namespace manyval {

// Text format for logical matrices:
//
//   # comment
//   logic l3
//   values 0 1/2 1
//   designated 1
//   order 0 < 1/2 < 1
//   conn imp 2
//   1 1 1
//   1/2 1 1
//   0 1/2 1
//   alias imp infix ->
//
// Tables are read row-major (first argument selects the row); a unary table
// is one row; a constant is a single entry. `designated` may be empty.
// Several `order` chains may be given; the order is their transitive
// closure.
Matrix parse_logic_text(std::string_view text);
Matrix parse_logic_file(const std::string& path);

std::string serialize_matrix(const Matrix& m);

// Builtin name ("lukasiewicz:3") or a path to a logic file.
Matrix load_logic(const std::string& name_or_path);

}  // namespace manyval
