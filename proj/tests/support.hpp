#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "abtess/tmat.hpp"

namespace abtess::test {

// Basis 1, i, j, k as bit masks 00, 01, 10, 11: e_r e_s = alpha^[both have i] beta^[both have j] e_(r xor s).
inline Tessarine struct_mul(const Tessarine& x, const Tessarine& y, double alpha, double beta) {
  std::array<double, 4> u{x.a, x.b, x.c, x.d}, v{y.a, y.b, y.c, y.d}, w{};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      double coef = 1.0;
      if ((r & 1) && (s & 1)) coef *= alpha;
      if ((r & 2) && (s & 2)) coef *= beta;
      w[r ^ s] += coef * u[r] * v[s];
    }
  return {w[0], w[1], w[2], w[3]};
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uni(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  Tessarine tess(double scale = 1.0) { return {scale * uni(), scale * uni(), scale * uni(), scale * uni()}; }
  TMat mat(const Params& p, Eigen::Index r, Eigen::Index c) {
    TMat x(p, r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) x.set(i, j, tess());
    return x;
  }
  // Random params: alpha in +-[0.5, 4], beta in [0.5, 4].
  Params params(bool positive_alpha) {
    double a = uni(0.5, 4.0);
    return Params(positive_alpha ? a : -a, uni(0.5, 4.0));
  }
};

inline double rel_gap(const Tessarine& x, const Tessarine& y) {
  return (x - y).max_abs() / std::max(1.0, std::max(x.max_abs(), y.max_abs()));
}

// Largest componentwise gap.
inline double mat_gap(const TMat& x, const TMat& y) { return sub(x, y).max_abs(); }

inline TMat naive_mul(const TMat& x, const TMat& y) {
  TMat out(x.params, x.rows(), y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < y.cols(); ++j) {
      Tessarine acc;
      for (Eigen::Index l = 0; l < x.cols(); ++l)
        acc = acc + struct_mul(x.entry(i, l), y.entry(l, j), x.params.alpha(), x.params.beta());
      out.set(i, j, acc);
    }
  return out;
}

// Generalized product by the channel-free expansion (x1 + x2 e)(y1 + y2 e), e^2 = -1.
inline GTMat naive_g_mul(const GTMat& x, const GTMat& y) {
  return GTMat(sub(naive_mul(x.x1, y.x1), naive_mul(x.x2, y.x2)), add(naive_mul(x.x1, y.x2), naive_mul(x.x2, y.x1)));
}

// Case-1 matrix of the reference experiment, under the given params.
inline TMat case1_matrix(const Params& p) {
  const Tessarine x1{17, 1.5, 1.2, 0.5}, x2{-0.1, 0.2, 0.03, -0.04}, x3{0.05, 0, 0.07, -0.1}, x4{0.05, 0, 0.1, -0.2};
  const Tessarine m[3][3] = {{x1, x2, x3}, {x2, x1, x4}, {x3, x4, x1}};
  TMat x(p, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x.set(i, j, m[i][j]);
  return x;
}

// Unnormalized seed vectors y1..y4 of the reference experiment.
inline std::vector<Tessarine> case1_seed(int which) {
  static const double y[4][3][4] = {
      {{0.1352, -0.9415, -0.532, -0.4838}, {0.5152, -0.1623, 1.6821, -0.712}, {0.2614, -0.1461, -0.8757, -1.1742}},
      {{0.3252, -1.7115, 0.3192, -0.0301}, {-0.7549, -0.1022, 0.3129, -0.1649}, {1.3703, -0.2414, -0.8649, 0.6277}},
      {{1.0933, 0.0774, -0.0068, 0.3714}, {1.1093, -1.2141, 1.5326, -0.2256}, {-0.8637, -1.1135, -0.7697, 1.1174}},
      {{0.7254, -0.205, 1.409, -1.2075}, {-0.0631, -0.1241, 1.4172, 0.7172}, {0.7147, 1.4897, 0.6715, 1.6302}}};
  std::vector<Tessarine> out;
  for (int r = 0; r < 3; ++r) out.push_back({y[which][r][0], y[which][r][1], y[which][r][2], y[which][r][3]});
  return out;
}

}  // namespace abtess::test
