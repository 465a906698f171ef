#pragma once

// Real/complex dense kernels the tessarine algorithms reduce to.
// LU is written out to control pivot ties and the swap parity; eigen, SVD and
// matrix square root come from Eigen.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace abtess::dense {

using MatR = Eigen::MatrixXd;
using MatC = Eigen::MatrixXcd;

template <class M>
struct Lu {
  M L, U;
  std::vector<int> perm;  // row perm[r] of X goes to row r of P*X
  int sign = 1;
};

// Partial pivoting on the largest modulus; ties keep the lowest row.
template <class M>
Lu<M> lu(const M& x) {
  using Index = Eigen::Index;
  Index p = x.rows();
  M a = x;
  Lu<M> out;
  out.perm.resize(p);
  for (Index r = 0; r < p; ++r) out.perm[r] = static_cast<int>(r);
  for (Index k = 0; k < p; ++k) {
    Index piv = k;
    double best = std::abs(a(k, k));
    for (Index r = k + 1; r < p; ++r) {
      double v = std::abs(a(r, k));
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (piv != k) {
      a.row(k).swap(a.row(piv));
      std::swap(out.perm[k], out.perm[piv]);
      out.sign = -out.sign;
    }
    if (best == 0.0) continue;
    Index rest = p - k - 1;
    if (rest == 0) continue;
    a.col(k).tail(rest) /= a(k, k);
    a.bottomRightCorner(rest, rest).noalias() -= a.col(k).tail(rest) * a.row(k).tail(rest);
  }
  out.L = M::Identity(p, p);
  out.L.template triangularView<Eigen::StrictlyLower>() = a.template triangularView<Eigen::StrictlyLower>();
  out.U = a.template triangularView<Eigen::Upper>();
  return out;
}

template <class M>
M perm_matrix(const std::vector<int>& perm) {
  Eigen::Index p = static_cast<Eigen::Index>(perm.size());
  M P = M::Zero(p, p);
  for (Eigen::Index r = 0; r < p; ++r) P(r, perm[r]) = 1.0;
  return P;
}

// Inverse through lu(); nullopt when a pivot is below 1e-13 of the largest entry.
template <class M>
std::optional<M> inverse(const M& x) {
  double top = x.cwiseAbs().maxCoeff();
  if (x.rows() == 0) return M(0, 0);
  if (top == 0.0) return std::nullopt;
  Lu<M> f = lu(x);
  for (Eigen::Index k = 0; k < x.rows(); ++k)
    if (std::abs(f.U(k, k)) <= 1e-13 * top) return std::nullopt;
  M rhs = perm_matrix<M>(f.perm);
  M y = f.L.template triangularView<Eigen::UnitLower>().solve(rhs);
  return f.U.template triangularView<Eigen::Upper>().solve(y);
}

struct Eig {
  Eigen::VectorXcd values;
  MatC vectors;
};

// Sorted by descending |lambda|, then descending real part, then original index.
Eig eig(const MatC& x);
Eig eig(const MatR& x);

template <class M>
struct EigH {
  Eigen::VectorXd values;
  M vectors;
};

EigH<MatR> eig_hermitian(const MatR& x);
EigH<MatC> eig_hermitian(const MatC& x);

template <class M>
struct Svd {
  M U, V;
  Eigen::VectorXd s;
};

// Full U and V; singular values nonincreasing.
Svd<MatR> svd(const MatR& x);
Svd<MatC> svd(const MatC& x);

// Principal square root; nullopt when the kernel fails.
std::optional<MatC> sqrtm(const MatC& x);
// Real root when one exists, otherwise the complex principal root.
std::optional<MatC> sqrtm(const MatR& x);

// Reciprocal 2-norm condition number (sigma_min / sigma_max).
double rcond(const MatC& x);

std::vector<int> canonical_order(const Eigen::VectorXcd& values);

}  // namespace abtess::dense
