#pragma once

#include <vector>

#include "abtess/algebra.hpp"
#include "abtess/alpha_complex.hpp"

namespace abtess {

// X = A + B i + C j + D k, stored as four real planes.
struct TMat {
  Params params{1.0, 1.0};
  RMat A, B, C, D;

  TMat() = default;
  TMat(const Params& p, Eigen::Index rows, Eigen::Index cols);
  TMat(const Params& p, RMat a, RMat b, RMat c, RMat d);

  Eigen::Index rows() const { return A.rows(); }
  Eigen::Index cols() const { return A.cols(); }
  Tessarine entry(Eigen::Index i, Eigen::Index j) const { return {A(i, j), B(i, j), C(i, j), D(i, j)}; }
  void set(Eigen::Index i, Eigen::Index j, const Tessarine& x);
  double max_abs() const;

  static TMat identity(const Params& p, Eigen::Index n);
  static TMat diagonal(const Params& p, const std::vector<Tessarine>& d);
  static TMat column(const Params& p, const std::vector<Tessarine>& v);
};

// Column vectors are single-column matrices.
using TVec = TMat;

// X = x1 + x2*eps.
struct GTMat {
  TMat x1, x2;

  GTMat() = default;
  GTMat(TMat a, TMat b);
  explicit GTMat(const TMat& a);

  const Params& params() const { return x1.params; }
  Eigen::Index rows() const { return x1.rows(); }
  Eigen::Index cols() const { return x1.cols(); }
  GTessarine entry(Eigen::Index i, Eigen::Index j) const { return {x1.entry(i, j), x2.entry(i, j)}; }
  double max_abs() const;
};

struct TessLu {
  TMat P, L, U;
  // [g_s, g_d] for alpha < 0; [g_s1, g_d1, g_s2, g_d2] for alpha > 0 (channel order).
  std::vector<int> gamma;
};

TMat add(const TMat& x, const TMat& y);
TMat sub(const TMat& x, const TMat& y);
TMat mul(const TMat& x, const TMat& y);
TMat scale(const Tessarine& s, const TMat& y);
TMat scale(double s, const TMat& y);

GTMat g_add(const GTMat& x, const GTMat& y);
GTMat g_sub(const GTMat& x, const GTMat& y);
GTMat g_mul(const GTMat& x, const GTMat& y);

TMat hermitian_transpose(const TMat& x, int n);
TMat hermitian_transpose(const TMat& x);  // regime's n
bool is_n_hermitian(const TMat& x, int n);

std::pair<CAMat, CAMat> split_matrix(const TMat& x);
TMat join_matrix(const CAMat& xs, const CAMat& xd, const Params& p);
GTMat join_matrix(const GCAMat& xs, const GCAMat& xd, const Params& p);

Tessarine trace(const TMat& x);
Tessarine inner_product(const TMat& x, const TMat& y, int n);
double norm(const TMat& x, int n);
double norm(const TMat& x);  // regime's n
Tessarine modulus_vec(const TVec& x, int n);

Tessarine det_permutation(const TMat& x);
TMat inverse(const TMat& x);
GTMat g_matrix_inverse(const GTMat& x);
GTMat sqrt(const TMat& x);
TessLu lu_pp(const TMat& x);
Tessarine det_p_from_signatures(const std::vector<int>& gamma, const Params& p);
Tessarine det_lu(const TMat& x);

// Channel matrices of X: two complex (alpha < 0, sqrt|alpha|-rescaled) or four real
// (alpha > 0, stored with zero imaginary part), in channel order.
std::vector<Eigen::MatrixXcd> channel_matrices(const TMat& x);
TMat from_channel_matrices(const std::vector<Eigen::MatrixXcd>& ch, const Params& p);
GTMat g_from_channel_matrices(const std::vector<Eigen::MatrixXcd>& ch, const Params& p);

// Rethrows a channel error raised on X_s (which = 0) or X_d (which = 1) under the
// matching tessarine channel name.
[[noreturn]] void rethrow_on_channel(const ChannelError& e, const Params& p, int which);

}  // namespace abtess
