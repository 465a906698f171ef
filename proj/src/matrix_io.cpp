#include "abtess/matrix_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace abtess {

using nlohmann::json;

namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_plane(std::ostringstream& os, const RMat& m) {
  os << '[';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      double v = m(i, j);
      if (!std::isfinite(v)) throw ValidationError("cannot serialize a non-finite entry");
      os << num17(v);
    }
    os << ']';
  }
  os << ']';
}

std::string write_doc(const TMat& x, const TMat* eps) {
  std::ostringstream os;
  os << "{\n  \"alpha\": " << num17(x.params.alpha()) << ",\n  \"beta\": " << num17(x.params.beta())
     << ",\n  \"rows\": " << x.rows() << ",\n  \"cols\": " << x.cols();
  const std::array<const RMat*, 4> planes{&x.A, &x.B, &x.C, &x.D};
  const char* names = "abcd";
  for (int n = 0; n < 4; ++n) {
    os << ",\n  \"" << names[n] << "\": ";
    write_plane(os, *planes[n]);
  }
  if (eps) {
    const std::array<const RMat*, 4> ep{&eps->A, &eps->B, &eps->C, &eps->D};
    const char* en = "efgh";
    for (int n = 0; n < 4; ++n) {
      os << ",\n  \"" << en[n] << "\": ";
      write_plane(os, *ep[n]);
    }
  }
  os << "\n}\n";
  return os.str();
}

const json& need(const json& doc, const char* key, const std::string& source) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(source + ": missing key \"" + key + "\"");
  return *it;
}

double need_number(const json& doc, const char* key, const std::string& source) {
  const json& v = need(doc, key, source);
  if (!v.is_number()) throw ParseError(source + ": key \"" + key + "\" must be a number");
  return v.get<double>();
}

Eigen::Index need_size(const json& doc, const char* key, const std::string& source) {
  const json& v = need(doc, key, source);
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw ParseError(source + ": key \"" + key + "\" must be an integer");
  long long n = v.get<long long>();
  if (n < 0) throw ValidationError(source + ": key \"" + key + "\" must be nonnegative");
  return static_cast<Eigen::Index>(n);
}

RMat read_plane(const json& doc, const char* key, Eigen::Index rows, Eigen::Index cols,
                const std::string& source) {
  const json& v = need(doc, key, source);
  if (!v.is_array()) throw ParseError(source + ": plane \"" + key + "\" must be an array of rows");
  if (static_cast<Eigen::Index>(v.size()) != rows)
    throw ValidationError(source + ": plane \"" + key + "\" has " + std::to_string(v.size()) + " rows, expected " +
                          std::to_string(rows));
  RMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = v[static_cast<size_t>(i)];
    if (!row.is_array()) throw ParseError(source + ": plane \"" + key + "\" row " + std::to_string(i) + " is not an array");
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw ValidationError(source + ": plane \"" + key + "\" row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    for (Eigen::Index j = 0; j < cols; ++j) {
      const json& e = row[static_cast<size_t>(j)];
      if (!e.is_number())
        throw ParseError(source + ": plane \"" + key + "\" entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is not a number");
      m(i, j) = e.get<double>();
    }
  }
  return m;
}

}  // namespace

TMat MatrixDoc::plain() const {
  if (generalized && value.x2.max_abs() != 0.0)
    throw ValidationError("document holds a generalized matrix with a nonzero eps part");
  return value.x1;
}

std::string to_json(const TMat& x) { return write_doc(x, nullptr); }

std::string to_json(const GTMat& x) { return write_doc(x.x1, &x.x2); }

MatrixDoc from_json(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(source + ": top level must be an object");
  double alpha = need_number(doc, "alpha", source);
  double beta = need_number(doc, "beta", source);
  Eigen::Index rows = need_size(doc, "rows", source);
  Eigen::Index cols = need_size(doc, "cols", source);
  if (alpha == 0.0) throw ValidationError(source + ": alpha must be nonzero");
  if (!(beta > 0.0)) throw ValidationError(source + ": beta must be positive");
  Params p(alpha, beta);
  TMat x(p, read_plane(doc, "a", rows, cols, source), read_plane(doc, "b", rows, cols, source),
         read_plane(doc, "c", rows, cols, source), read_plane(doc, "d", rows, cols, source));
  MatrixDoc out;
  bool any_eps = doc.contains("e") || doc.contains("f") || doc.contains("g") || doc.contains("h");
  if (any_eps) {
    TMat e(p, read_plane(doc, "e", rows, cols, source), read_plane(doc, "f", rows, cols, source),
           read_plane(doc, "g", rows, cols, source), read_plane(doc, "h", rows, cols, source));
    out.value = GTMat(std::move(x), std::move(e));
    out.generalized = true;
  } else {
    out.value = GTMat(x);
  }
  return out;
}

MatrixDoc load_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), path);
}

namespace {

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw ValidationError(path + ": write failed");
}

}  // namespace

void save_matrix(const TMat& x, const std::string& path) { write_text(to_json(x), path); }

void save_matrix(const GTMat& x, const std::string& path) { write_text(to_json(x), path); }

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_tessarine(const Tessarine& x) {
  std::string out = format_number(x.a);
  const std::array<std::pair<double, const char*>, 3> parts{{{x.b, "i"}, {x.c, "j"}, {x.d, "k"}}};
  for (const auto& [v, unit] : parts) {
    std::string s = format_number(v);
    if (s[0] != '-') out += '+';
    out += s;
    out += unit;
  }
  return out;
}

}  // namespace abtess
