#pragma once

#include <string>

#include "nccov/geometry.hpp"
#include "nccov/matrix.hpp"

namespace nccov {

// Text formats
//
// Quaternion: coefficient terms in the order 1, i, j, k, joined by signs,
// zero terms omitted, coefficients integers or fractions: "1/2+i-3k".
// The zero quaternion prints as "0".
//
// Matrix: rows separated by ";", entries by ",": "1,i;j,1/2+k".
// Whitespace is allowed around terms and separators.
//
// parse(print(x)) = x for every value; print(parse(s)) normalizes s.

std::string to_text(const Rational& r);
std::string to_text(const Quaternion& q);
std::string to_text(const NcMatrix& m);

// Tensor map: "arity=N dim=M" followed by one block per populated slot,
// "[out|in1,..,inN:(f0|..|fN),(..)]" with factors in matrix entry syntax.
// Diagnostic output only; there is no parser for it.
std::string to_text(const TensorPolyMap& a);

// Throws ParseError carrying the 0-based offset of the first bad character.
Quaternion parse_quaternion(const std::string& s);
NcMatrix parse_matrix(const std::string& s);

}  // namespace nccov
