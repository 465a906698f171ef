#pragma once

#include <string>

#include "abtess/tmat.hpp"

namespace abtess {

// Matrix document: {"alpha", "beta", "rows", "cols", "a", "b", "c", "d"} with
// row-major nested arrays; "e", "f", "g", "h" add the eps part of a generalized matrix.
struct MatrixDoc {
  GTMat value;
  bool generalized = false;

  // The plain matrix; throws ValidationError for a generalized document with a nonzero eps part.
  TMat plain() const;
};

std::string to_json(const TMat& x);
std::string to_json(const GTMat& x);
MatrixDoc from_json(const std::string& text, const std::string& source = "<string>");

MatrixDoc load_matrix(const std::string& path);
void save_matrix(const TMat& x, const std::string& path);
void save_matrix(const GTMat& x, const std::string& path);

// Shortest round-trip decimal form of v.
std::string format_number(double v);
// a+bi+cj+dk with signs folded in, e.g. 0.375+0i-0.125j+0k.
std::string format_tessarine(const Tessarine& x);

}  // namespace abtess
