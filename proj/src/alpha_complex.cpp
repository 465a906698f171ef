#include "abtess/alpha_complex.hpp"

#include <algorithm>
#include <cmath>

#include "dense.hpp"

namespace abtess {

using dense::MatC;
using dense::MatR;

namespace {

const char* split_name(double alpha, int s) {
  if (alpha < 0) return "complex";
  return s == 0 ? "plus" : "minus";
}

MatC to_complex(const CAMat& X) {
  double sa = std::sqrt(std::abs(X.alpha));
  MatC z(X.rows(), X.cols());
  z.real() = X.re;
  z.imag() = sa * X.im;
  return z;
}

std::pair<MatR, MatR> to_real_pair(const CAMat& X) {
  double sa = std::sqrt(X.alpha);
  return {X.re + sa * X.im, X.re - sa * X.im};
}

CAMat from_complex(const MatC& z, double alpha) {
  double sa = std::sqrt(std::abs(alpha));
  return CAMat(alpha, z.real(), z.imag() / sa);
}

CAMat from_real_pair(const MatR& e, const MatR& f, double alpha) {
  double sa = std::sqrt(alpha);
  MatR c = (e + f) / 2.0;
  MatR d = (e - c) / sa;
  return CAMat(alpha, c, d);
}

void check_square(const CAMat& X, const char* op) {
  if (X.rows() != X.cols()) throw ShapeError(std::string(op) + " needs a square matrix");
}

void check_perm(const std::vector<int>& perm, size_t r) {
  if (perm.size() != r) throw InvalidArgument("permutation has wrong length");
  std::vector<bool> seen(r, false);
  for (int v : perm) {
    if (v < 0 || static_cast<size_t>(v) >= r || seen[v]) throw InvalidArgument("malformed permutation");
    seen[v] = true;
  }
}

template <class M>
void apply_perm(dense::Svd<M>& s, const std::vector<int>& perm) {
  if (perm.empty()) return;
  M U = s.U, V = s.V;
  Eigen::VectorXd sv = s.s;
  for (size_t n = 0; n < perm.size(); ++n) {
    auto to = static_cast<Eigen::Index>(n);
    s.U.col(to) = U.col(perm[n]);
    s.V.col(to) = V.col(perm[n]);
    s.s(to) = sv(perm[n]);
  }
}

std::vector<AlphaComplex> diag_values(const CAMat& d) {
  std::vector<AlphaComplex> out(static_cast<size_t>(d.cols()));
  for (Eigen::Index n = 0; n < d.cols(); ++n) out[n] = {d.re(0, n), d.im(0, n)};
  return out;
}

}  // namespace

CAMat CAMat::identity(double alpha, Eigen::Index p) {
  return CAMat(alpha, RMat::Identity(p, p), RMat::Zero(p, p));
}

CAMat ca_mul(const CAMat& x, const CAMat& y) {
  if (x.cols() != y.rows()) throw ShapeError("ca_mul: inner dimensions differ");
  return CAMat(x.alpha, x.re * y.re + x.alpha * (x.im * y.im), x.re * y.im + x.im * y.re);
}

CAMat ca_sub(const CAMat& x, const CAMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ShapeError("ca_sub: shapes differ");
  return CAMat(x.alpha, x.re - y.re, x.im - y.im);
}

double ca_max_abs(const CAMat& x) {
  if (x.re.size() == 0) return 0.0;
  return std::max(x.re.cwiseAbs().maxCoeff(), x.im.cwiseAbs().maxCoeff());
}

CAMat ca_hermitian(const CAMat& X) {
  if (X.alpha < 0) return CAMat(X.alpha, X.re.transpose(), -X.im.transpose());
  return CAMat(X.alpha, X.re.transpose(), X.im.transpose());
}

std::vector<Eigen::MatrixXcd> ca_to_splits(const CAMat& X) {
  if (X.alpha < 0) return {to_complex(X)};
  auto [e, f] = to_real_pair(X);
  return {e.cast<cplx>(), f.cast<cplx>()};
}

GCAMat ca_from_splits(const std::vector<Eigen::MatrixXcd>& s, double alpha) {
  if (alpha < 0) {
    CAMat x1 = from_complex(s.at(0), alpha);
    return {x1, CAMat(alpha, x1.rows(), x1.cols())};
  }
  return {from_real_pair(s.at(0).real(), s.at(1).real(), alpha),
          from_real_pair(s.at(0).imag(), s.at(1).imag(), alpha)};
}

CAMat ca_inverse(const CAMat& X) {
  check_square(X, "ca_inverse");
  if (X.alpha < 0) {
    auto z = dense::inverse(to_complex(X));
    if (!z) throw Singular("alpha-complex matrix is singular", split_name(X.alpha, 0));
    return from_complex(*z, X.alpha);
  }
  auto [e, f] = to_real_pair(X);
  auto ei = dense::inverse(e);
  if (!ei) throw Singular("alpha-complex matrix is singular", split_name(X.alpha, 0));
  auto fi = dense::inverse(f);
  if (!fi) throw Singular("alpha-complex matrix is singular", split_name(X.alpha, 1));
  return from_real_pair(*ei, *fi, X.alpha);
}

GCAMat ca_sqrt(const CAMat& X) {
  check_square(X, "ca_sqrt");
  if (X.alpha < 0) {
    auto r = dense::sqrtm(to_complex(X));
    if (!r) throw NoSquareRoot("no square root", split_name(X.alpha, 0));
    return ca_from_splits({*r}, X.alpha);
  }
  auto [e, f] = to_real_pair(X);
  auto re = dense::sqrtm(e);
  if (!re) throw NoSquareRoot("no square root", split_name(X.alpha, 0));
  auto rf = dense::sqrtm(f);
  if (!rf) throw NoSquareRoot("no square root", split_name(X.alpha, 1));
  return ca_from_splits({*re, *rf}, X.alpha);
}

CALu ca_lu(const CAMat& X) {
  check_square(X, "ca_lu");
  if (X.alpha < 0) {
    auto f = dense::lu(to_complex(X));
    MatC P = dense::perm_matrix<MatC>(f.perm);
    return {from_complex(P, X.alpha), from_complex(f.L, X.alpha), from_complex(f.U, X.alpha), {f.sign}};
  }
  auto [e, g] = to_real_pair(X);
  auto fe = dense::lu(e);
  auto fg = dense::lu(g);
  MatR Pe = dense::perm_matrix<MatR>(fe.perm), Pg = dense::perm_matrix<MatR>(fg.perm);
  return {from_real_pair(Pe, Pg, X.alpha), from_real_pair(fe.L, fg.L, X.alpha),
          from_real_pair(fe.U, fg.U, X.alpha), {fe.sign, fg.sign}};
}

CAEig ca_eig(const CAMat& X) {
  check_square(X, "ca_eig");
  std::vector<MatC> vals, vecs;
  if (X.alpha < 0) {
    auto r = dense::eig(to_complex(X));
    vals.push_back(r.values.transpose());
    vecs.push_back(r.vectors);
  } else {
    auto [e, f] = to_real_pair(X);
    for (const MatR* m : {&e, &f}) {
      auto r = dense::eig(*m);
      vals.push_back(r.values.transpose());
      vecs.push_back(r.vectors);
    }
  }
  GCAMat v = ca_from_splits(vals, X.alpha);
  GCAMat u = ca_from_splits(vecs, X.alpha);
  return {diag_values(v.x1), diag_values(v.x2), u.x1, u.x2};
}

CAEig ca_eig_hermitian(const CAMat& X) {
  check_square(X, "ca_eig_hermitian");
  CAEig out;
  if (X.alpha < 0) {
    auto r = dense::eig_hermitian(to_complex(X));
    CAMat v = from_complex(r.values.transpose().cast<cplx>(), X.alpha);
    out.values = diag_values(v);
    out.vectors = from_complex(r.vectors, X.alpha);
  } else {
    auto [e, f] = to_real_pair(X);
    auto re = dense::eig_hermitian(e);
    auto rf = dense::eig_hermitian(f);
    out.values = diag_values(from_real_pair(re.values.transpose(), rf.values.transpose(), X.alpha));
    out.vectors = from_real_pair(re.vectors, rf.vectors, X.alpha);
  }
  out.values_eps.assign(out.values.size(), AlphaComplex{});
  out.vectors_eps = CAMat(X.alpha, X.rows(), X.cols());
  return out;
}

CASvd ca_svd(const CAMat& X, const std::vector<std::vector<int>>& perms) {
  size_t splits = X.alpha < 0 ? 1 : 2;
  size_t r = static_cast<size_t>(std::min(X.rows(), X.cols()));
  if (!perms.empty()) {
    if (perms.size() != splits) throw InvalidArgument("ca_svd: one permutation per split expected");
    for (const auto& p : perms) check_perm(p, r);
  }
  auto perm = [&](size_t s) { return perms.empty() ? std::vector<int>{} : perms[s]; };
  CASvd out;
  if (X.alpha < 0) {
    auto s = dense::svd(to_complex(X));
    apply_perm(s, perm(0));
    out.U = from_complex(s.U, X.alpha);
    out.V = from_complex(s.V, X.alpha);
    for (Eigen::Index n = 0; n < s.s.size(); ++n) out.sigmas.push_back({s.s(n), 0.0});
    return out;
  }
  auto [e, f] = to_real_pair(X);
  auto se = dense::svd(e);
  auto sf = dense::svd(f);
  apply_perm(se, perm(0));
  apply_perm(sf, perm(1));
  out.U = from_real_pair(se.U, sf.U, X.alpha);
  out.V = from_real_pair(se.V, sf.V, X.alpha);
  out.sigmas = diag_values(from_real_pair(se.s.transpose(), sf.s.transpose(), X.alpha));
  return out;
}

}  // namespace abtess
