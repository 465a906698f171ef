#pragma once

#include <Eigen/Dense>
#include <vector>

#include "abtess/algebra.hpp"

namespace abtess {

using RMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// X = re + im*i with i^2 = alpha.
struct CAMat {
  double alpha = -1.0;
  RMat re, im;

  CAMat() = default;
  CAMat(double alpha, Eigen::Index rows, Eigen::Index cols)
      : alpha(alpha), re(RMat::Zero(rows, cols)), im(RMat::Zero(rows, cols)) {}
  CAMat(double alpha, RMat re, RMat im) : alpha(alpha), re(std::move(re)), im(std::move(im)) {}

  Eigen::Index rows() const { return re.rows(); }
  Eigen::Index cols() const { return re.cols(); }
  static CAMat identity(double alpha, Eigen::Index p);
};

CAMat ca_mul(const CAMat& x, const CAMat& y);
CAMat ca_sub(const CAMat& x, const CAMat& y);
double ca_max_abs(const CAMat& x);

// X = x1 + x2*eps; x2 is identically zero for alpha < 0.
struct GCAMat {
  CAMat x1, x2;
};

struct CALu {
  CAMat P, L, U;
  std::vector<int> gammas;  // one entry for alpha < 0, two (A+B, A-B splits) for alpha > 0
};

struct CAEig {
  // eigenvalue n is values[n] + values_eps[n]*eps; column n of vectors (+ eps part) its vector
  std::vector<AlphaComplex> values, values_eps;
  CAMat vectors, vectors_eps;
};

struct CASvd {
  CAMat U, V;
  // diagonal of Sigma as alpha-complex values (im = 0 for alpha < 0)
  std::vector<AlphaComplex> sigmas;
};

CAMat ca_inverse(const CAMat& X);
GCAMat ca_sqrt(const CAMat& X);
CALu ca_lu(const CAMat& X);
CAEig ca_eig(const CAMat& X);
CAEig ca_eig_hermitian(const CAMat& X);
// perms: empty, or one permutation of 0..min(rows,cols)-1 per split (1 for alpha < 0, 2 otherwise).
CASvd ca_svd(const CAMat& X, const std::vector<std::vector<int>>& perms = {});

// Conjugate transpose in the matching regime (theta = -1 for alpha < 0, plain transpose otherwise).
CAMat ca_hermitian(const CAMat& X);

// Split representation: alpha < 0 -> one complex matrix A + sqrt|alpha| B (imag unit);
// alpha > 0 -> two real matrices A + sqrt(alpha) B, A - sqrt(alpha) B.
std::vector<Eigen::MatrixXcd> ca_to_splits(const CAMat& X);
// Inverse of ca_to_splits; imaginary parts of the alpha > 0 splits go to the eps part.
GCAMat ca_from_splits(const std::vector<Eigen::MatrixXcd>& s, double alpha);

}  // namespace abtess
