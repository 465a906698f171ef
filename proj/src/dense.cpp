#include "dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <unsupported/Eigen/MatrixFunctions>

namespace abtess::dense {

namespace {

constexpr double kTieTol = 1e-12;

template <class V>
std::vector<int> order_by(const V& mag, const V& re) {
  std::vector<int> idx(static_cast<size_t>(mag.size()));
  std::iota(idx.begin(), idx.end(), 0);
  double scale = mag.size() ? std::max(1.0, mag.maxCoeff()) : 1.0;
  double tol = kTieTol * scale;
  std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) {
    if (std::abs(mag(l) - mag(r)) > tol) return mag(l) > mag(r);
    if (std::abs(re(l) - re(r)) > tol) return re(l) > re(r);
    return false;
  });
  return idx;
}

template <class M>
M permute_cols(const M& m, const std::vector<int>& idx) {
  M out(m.rows(), m.cols());
  for (size_t n = 0; n < idx.size(); ++n) out.col(static_cast<Eigen::Index>(n)) = m.col(idx[n]);
  return out;
}

Eig sorted(const Eigen::VectorXcd& values, const MatC& vectors) {
  auto idx = canonical_order(values);
  Eig out;
  out.values.resize(values.size());
  for (size_t n = 0; n < idx.size(); ++n) out.values(static_cast<Eigen::Index>(n)) = values(idx[n]);
  out.vectors = permute_cols(vectors, idx);
  return out;
}

template <class M>
EigH<M> sorted_h(const Eigen::VectorXd& values, const M& vectors) {
  auto idx = order_by<Eigen::VectorXd>(values.cwiseAbs(), values);
  EigH<M> out;
  out.values.resize(values.size());
  for (size_t n = 0; n < idx.size(); ++n) out.values(static_cast<Eigen::Index>(n)) = values(idx[n]);
  out.vectors = permute_cols(vectors, idx);
  return out;
}

bool root_ok(const MatC& r, const MatC& x) {
  if (!r.allFinite()) return false;
  double scale = std::max(1.0, x.norm());
  return (r * r - x).norm() <= 1e-6 * scale;
}

}  // namespace

std::vector<int> canonical_order(const Eigen::VectorXcd& values) {
  Eigen::VectorXd mag = values.cwiseAbs();
  Eigen::VectorXd re = values.real();
  return order_by<Eigen::VectorXd>(mag, re);
}

Eig eig(const MatC& x) {
  Eigen::ComplexEigenSolver<MatC> es(x, true);
  return sorted(es.eigenvalues(), es.eigenvectors());
}

Eig eig(const MatR& x) {
  Eigen::EigenSolver<MatR> es(x, true);
  return sorted(es.eigenvalues(), es.eigenvectors());
}

EigH<MatR> eig_hermitian(const MatR& x) {
  Eigen::SelfAdjointEigenSolver<MatR> es(x);
  return sorted_h<MatR>(es.eigenvalues(), es.eigenvectors());
}

EigH<MatC> eig_hermitian(const MatC& x) {
  Eigen::SelfAdjointEigenSolver<MatC> es(x);
  return sorted_h<MatC>(es.eigenvalues(), es.eigenvectors());
}

Svd<MatR> svd(const MatR& x) {
  Eigen::BDCSVD<MatR> s(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {s.matrixU(), s.matrixV(), s.singularValues()};
}

Svd<MatC> svd(const MatC& x) {
  Eigen::BDCSVD<MatC> s(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {s.matrixU(), s.matrixV(), s.singularValues()};
}

std::optional<MatC> sqrtm(const MatC& x) {
  MatC r = x.sqrt();
  if (!root_ok(r, x)) return std::nullopt;
  return r;
}

std::optional<MatC> sqrtm(const MatR& x) {
  MatR r = x.sqrt();
  MatC rc = r.cast<std::complex<double>>();
  MatC xc = x.cast<std::complex<double>>();
  if (root_ok(rc, xc)) return rc;
  return sqrtm(xc);
}

double rcond(const MatC& x) {
  if (x.size() == 0) return 1.0;
  Eigen::JacobiSVD<MatC> s(x);
  auto sv = s.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

}  // namespace abtess::dense
