#include "abtess/tmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace abtess {

namespace {

void check_same(const TMat& x, const TMat& y, const char* op) {
  if (x.params != y.params) throw ShapeError(std::string(op) + ": params differ");
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ShapeError(std::string(op) + ": shapes differ");
}

void check_square(const TMat& x, const char* op) {
  if (x.rows() != x.cols()) throw ShapeError(std::string(op) + " needs a square matrix");
}

}  // namespace

TMat::TMat(const Params& p, Eigen::Index rows, Eigen::Index cols)
    : params(p),
      A(RMat::Zero(rows, cols)),
      B(RMat::Zero(rows, cols)),
      C(RMat::Zero(rows, cols)),
      D(RMat::Zero(rows, cols)) {}

TMat::TMat(const Params& p, RMat a, RMat b, RMat c, RMat d)
    : params(p), A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
  auto same = [&](const RMat& m) { return m.rows() == A.rows() && m.cols() == A.cols(); };
  if (!same(B) || !same(C) || !same(D)) throw ShapeError("component planes differ in shape");
}

void TMat::set(Eigen::Index i, Eigen::Index j, const Tessarine& x) {
  A(i, j) = x.a;
  B(i, j) = x.b;
  C(i, j) = x.c;
  D(i, j) = x.d;
}

double TMat::max_abs() const {
  if (A.size() == 0) return 0.0;
  return std::max({A.cwiseAbs().maxCoeff(), B.cwiseAbs().maxCoeff(), C.cwiseAbs().maxCoeff(),
                   D.cwiseAbs().maxCoeff()});
}

TMat TMat::identity(const Params& p, Eigen::Index n) {
  TMat x(p, n, n);
  x.A.setIdentity();
  return x;
}

TMat TMat::diagonal(const Params& p, const std::vector<Tessarine>& d) {
  auto n = static_cast<Eigen::Index>(d.size());
  TMat x(p, n, n);
  for (Eigen::Index i = 0; i < n; ++i) x.set(i, i, d[i]);
  return x;
}

TMat TMat::column(const Params& p, const std::vector<Tessarine>& v) {
  auto n = static_cast<Eigen::Index>(v.size());
  TMat x(p, n, 1);
  for (Eigen::Index i = 0; i < n; ++i) x.set(i, 0, v[i]);
  return x;
}

GTMat::GTMat(TMat a, TMat b) : x1(std::move(a)), x2(std::move(b)) { check_same(x1, x2, "GTMat"); }

GTMat::GTMat(const TMat& a) : x1(a), x2(a.params, a.rows(), a.cols()) {}

double GTMat::max_abs() const { return std::max(x1.max_abs(), x2.max_abs()); }

TMat add(const TMat& x, const TMat& y) {
  check_same(x, y, "add");
  return TMat(x.params, x.A + y.A, x.B + y.B, x.C + y.C, x.D + y.D);
}

TMat sub(const TMat& x, const TMat& y) {
  check_same(x, y, "sub");
  return TMat(x.params, x.A - y.A, x.B - y.B, x.C - y.C, x.D - y.D);
}

TMat mul(const TMat& x, const TMat& y) {
  if (x.params != y.params) throw ShapeError("mul: params differ");
  if (x.cols() != y.rows()) throw ShapeError("mul: inner dimensions differ");
  double al = x.params.alpha(), be = x.params.beta();
  // Same expansion as tess_mul, with products of planes.
  RMat a = x.A * y.A + al * (x.B * y.B) + be * (x.C * y.C) + (al * be) * (x.D * y.D);
  RMat b = x.A * y.B + x.B * y.A + be * (x.C * y.D + x.D * y.C);
  RMat c = x.A * y.C + x.C * y.A + al * (x.B * y.D + x.D * y.B);
  RMat d = x.A * y.D + x.D * y.A + x.B * y.C + x.C * y.B;
  return TMat(x.params, std::move(a), std::move(b), std::move(c), std::move(d));
}

TMat scale(const Tessarine& s, const TMat& y) {
  double al = y.params.alpha(), be = y.params.beta();
  RMat a = s.a * y.A + (al * s.b) * y.B + (be * s.c) * y.C + (al * be * s.d) * y.D;
  RMat b = s.a * y.B + s.b * y.A + be * (s.c * y.D + s.d * y.C);
  RMat c = s.a * y.C + s.c * y.A + al * (s.b * y.D + s.d * y.B);
  RMat d = s.a * y.D + s.d * y.A + s.b * y.C + s.c * y.B;
  return TMat(y.params, std::move(a), std::move(b), std::move(c), std::move(d));
}

TMat scale(double s, const TMat& y) { return TMat(y.params, s * y.A, s * y.B, s * y.C, s * y.D); }

GTMat g_add(const GTMat& x, const GTMat& y) { return GTMat(add(x.x1, y.x1), add(x.x2, y.x2)); }

GTMat g_sub(const GTMat& x, const GTMat& y) { return GTMat(sub(x.x1, y.x1), sub(x.x2, y.x2)); }

GTMat g_mul(const GTMat& x, const GTMat& y) {
  return GTMat(sub(mul(x.x1, y.x1), mul(x.x2, y.x2)), add(mul(x.x1, y.x2), mul(x.x2, y.x1)));
}

TMat hermitian_transpose(const TMat& x, int n) {
  if (n != 1 && n != 2) throw InvalidArgument("n must be 1 or 2");
  if (n == 1) return TMat(x.params, x.A.transpose(), x.B.transpose(), x.C.transpose(), x.D.transpose());
  return TMat(x.params, x.A.transpose(), -x.B.transpose(), x.C.transpose(), -x.D.transpose());
}

TMat hermitian_transpose(const TMat& x) { return hermitian_transpose(x, x.params.n()); }

bool is_n_hermitian(const TMat& x, int n) {
  check_square(x, "is_n_hermitian");
  TMat h = hermitian_transpose(x, n);
  double tol = 1e-12 * std::max(1.0, x.max_abs());
  return sub(x, h).max_abs() <= tol;
}

std::pair<CAMat, CAMat> split_matrix(const TMat& x) {
  double sb = x.params.sqrt_beta(), al = x.params.alpha();
  return {CAMat(al, x.A + sb * x.C, x.B + sb * x.D), CAMat(al, x.A - sb * x.C, x.B - sb * x.D)};
}

TMat join_matrix(const CAMat& xs, const CAMat& xd, const Params& p) {
  if (xs.rows() != xd.rows() || xs.cols() != xd.cols()) throw ShapeError("join_matrix: shapes differ");
  double sb = p.sqrt_beta();
  RMat a = (xs.re + xd.re) / 2.0;
  RMat b = (xs.im + xd.im) / 2.0;
  RMat c = (xs.re - a) / sb;
  RMat d = (xs.im - b) / sb;
  return TMat(p, std::move(a), std::move(b), std::move(c), std::move(d));
}

GTMat join_matrix(const GCAMat& xs, const GCAMat& xd, const Params& p) {
  return GTMat(join_matrix(xs.x1, xd.x1, p), join_matrix(xs.x2, xd.x2, p));
}

Tessarine trace(const TMat& x) {
  check_square(x, "trace");
  return {x.A.trace(), x.B.trace(), x.C.trace(), x.D.trace()};
}

Tessarine inner_product(const TMat& x, const TMat& y, int n) {
  check_same(x, y, "inner_product");
  if (n != 1 && n != 2) throw InvalidArgument("n must be 1 or 2");
  // trace(X^H Y) without forming the product: sums of elementwise products.
  TMat h(x.params, x.A, n == 2 ? RMat(-x.B) : x.B, x.C, n == 2 ? RMat(-x.D) : x.D);
  double al = x.params.alpha(), be = x.params.beta();
  auto dot = [](const RMat& u, const RMat& v) { return u.cwiseProduct(v).sum(); };
  return {dot(h.A, y.A) + al * dot(h.B, y.B) + be * dot(h.C, y.C) + al * be * dot(h.D, y.D),
          dot(h.A, y.B) + dot(h.B, y.A) + be * (dot(h.C, y.D) + dot(h.D, y.C)),
          dot(h.A, y.C) + dot(h.C, y.A) + al * (dot(h.B, y.D) + dot(h.D, y.B)),
          dot(h.A, y.D) + dot(h.D, y.A) + dot(h.B, y.C) + dot(h.C, y.B)};
}

double norm(const TMat& x, int n) { return std::sqrt(std::max(0.0, inner_product(x, x, n).a)); }

double norm(const TMat& x) { return norm(x, x.params.n()); }

Tessarine modulus_vec(const TVec& x, int n) {
  if (n != x.params.n()) throw InvalidArgument("modulus needs n matched to the sign of alpha");
  Tessarine s = inner_product(x, x, n);
  // Channels of x^H x are real and nonnegative up to rounding.
  auto v = channel_values(s, x.params);
  for (auto& z : v) z = std::sqrt(std::max(0.0, z.real()));
  return from_channel_values(v, x.params);
}

Tessarine det_permutation(const TMat& x) {
  check_square(x, "det_permutation");
  auto p = x.rows();
  if (p > 8) throw InvalidArgument("det_permutation is limited to p <= 8");
  std::vector<int> perm(static_cast<size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  Tessarine total{};
  if (p == 0) return Tessarine::real(1.0);
  do {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Tessarine term = Tessarine::real(inversions % 2 ? -1.0 : 1.0);
    for (Eigen::Index r = 0; r < p; ++r) term = tess_mul(term, x.entry(r, perm[r]), x.params);
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

void rethrow_on_channel(const ChannelError& e, const Params& p, int which) {
  std::string ch;
  if (!p.four_real()) {
    ch = channel_name(p, which);
  } else {
    int split = e.channel() == "minus" ? 1 : 0;
    ch = channel_name(p, 2 * which + split);
  }
  if (dynamic_cast<const Singular*>(&e)) throw Singular("matrix channel is singular", ch);
  if (dynamic_cast<const NoSquareRoot*>(&e)) throw NoSquareRoot("matrix channel has no square root", ch);
  if (dynamic_cast<const DefectiveChannel*>(&e)) throw DefectiveChannel("matrix channel is defective", ch);
  if (dynamic_cast<const ZeroDivisor*>(&e)) throw ZeroDivisor("channel vanished", ch);
  throw ChannelError(e.what(), ch);
}

TMat inverse(const TMat& x) {
  check_square(x, "inverse");
  auto [xs, xd] = split_matrix(x);
  CAMat is, id;
  try {
    is = ca_inverse(xs);
  } catch (const ChannelError& e) {
    rethrow_on_channel(e, x.params, 0);
  }
  try {
    id = ca_inverse(xd);
  } catch (const ChannelError& e) {
    rethrow_on_channel(e, x.params, 1);
  }
  return join_matrix(is, id, x.params);
}

namespace {

// X_s or X_d of a generalized matrix, as a matrix over (1, eps, i, eps i) relabeled
// into the (-1, alpha) algebra.
TMat equiv_channel(const GTMat& x, double sign) {
  const TMat& a = x.x1;
  const TMat& e = x.x2;
  double sb = sign * x.params().sqrt_beta();
  Params q = equiv_params(x.params());
  // X3 = (A1, A2, B1, B2), X4 = (C1, C2, D1, D2) in the (1, eps, i, eps i) basis.
  return TMat(q, a.A + sb * a.C, e.A + sb * e.C, a.B + sb * a.D, e.B + sb * e.D);
}

}  // namespace

GTMat g_matrix_inverse(const GTMat& x) {
  if (!x.params().four_real()) throw DomainError("generalized matrices need alpha > 0");
  if (x.rows() != x.cols()) throw ShapeError("g_matrix_inverse needs a square matrix");
  const Params& p = x.params();
  TMat inv[2];
  for (int which = 0; which < 2; ++which) {
    TMat ch = equiv_channel(x, which == 0 ? 1.0 : -1.0);
    try {
      inv[which] = inverse(ch);
    } catch (const Singular& e) {
      std::string name = channel_name(p, 2 * which + (e.channel() == "ch_d" ? 1 : 0));
      throw Singular("generalized matrix channel is singular", name);
    }
  }
  double sb = p.sqrt_beta();
  // C = (S + D)/2, D' = (S - C)/sqrt(beta) in the (1, eps, i, eps i) coordinates.
  TMat c = scale(0.5, add(inv[0], inv[1]));
  TMat d = scale(1.0 / sb, sub(inv[0], c));
  TMat x1(p, c.A, c.C, d.A, d.C);
  TMat x2(p, c.B, c.D, d.B, d.D);
  return GTMat(std::move(x1), std::move(x2));
}

GTMat sqrt(const TMat& x) {
  check_square(x, "sqrt");
  auto [xs, xd] = split_matrix(x);
  GCAMat rs, rd;
  try {
    rs = ca_sqrt(xs);
  } catch (const ChannelError& e) {
    rethrow_on_channel(e, x.params, 0);
  }
  try {
    rd = ca_sqrt(xd);
  } catch (const ChannelError& e) {
    rethrow_on_channel(e, x.params, 1);
  }
  return join_matrix(rs, rd, x.params);
}

TessLu lu_pp(const TMat& x) {
  check_square(x, "lu_pp");
  auto [xs, xd] = split_matrix(x);
  CALu ls = ca_lu(xs), ld = ca_lu(xd);
  TessLu out{join_matrix(ls.P, ld.P, x.params), join_matrix(ls.L, ld.L, x.params),
             join_matrix(ls.U, ld.U, x.params), {}};
  out.gamma = ls.gammas;
  out.gamma.insert(out.gamma.end(), ld.gammas.begin(), ld.gammas.end());
  return out;
}

Tessarine det_p_from_signatures(const std::vector<int>& gamma, const Params& p) {
  size_t want = p.four_real() ? 4 : 2;
  if (gamma.size() != want) throw InvalidArgument("signature vector has wrong length");
  for (int g : gamma)
    if (g != 1 && g != -1) throw InvalidArgument("signatures must be +1 or -1");
  double ib = 1.0 / p.sqrt_beta();
  if (!p.four_real()) {
    if (gamma[0] == gamma[1]) return Tessarine::real(gamma[0]);
    return {0, 0, gamma[0] * ib, 0};
  }
  double ia = 1.0 / p.sqrt_abs_alpha(), iab = ia * ib;
  const Tessarine a1{0.5, 0.5 * ia, 0.5 * ib, -0.5 * iab};
  const Tessarine a2{-0.5, 0.5 * ia, 0.5 * ib, 0.5 * iab};
  struct Row {
    int g[4];
    Tessarine v;
  };
  const Row table[] = {
      {{1, 1, 1, 1}, {1, 0, 0, 0}},
      {{-1, -1, -1, -1}, {-1, 0, 0, 0}},
      {{1, -1, 1, -1}, {0, ia, 0, 0}},
      {{-1, 1, -1, 1}, {0, -ia, 0, 0}},
      {{1, 1, -1, -1}, {0, 0, ib, 0}},
      {{-1, -1, 1, 1}, {0, 0, -ib, 0}},
      {{1, -1, -1, 1}, {0, 0, 0, iab}},
      {{-1, 1, 1, -1}, {0, 0, 0, -iab}},
      {{1, 1, 1, -1}, a1},
      {{1, -1, -1, -1}, a2},
      {{1, -1, 1, 1}, conjugate(a1, Axis::i)},
      {{-1, -1, 1, -1}, conjugate(a2, Axis::i)},
      {{1, 1, -1, 1}, conjugate(a1, Axis::j)},
      {{-1, 1, -1, -1}, conjugate(a2, Axis::j)},
      {{-1, 1, 1, 1}, conjugate(a1, Axis::k)},
      {{-1, -1, -1, 1}, conjugate(a2, Axis::k)},
  };
  for (const Row& r : table)
    if (std::equal(gamma.begin(), gamma.end(), r.g)) return r.v;
  throw InvalidArgument("signature vector not in table");
}

Tessarine det_lu(const TMat& x) {
  TessLu f = lu_pp(x);
  Tessarine det = det_p_from_signatures(f.gamma, x.params);
  for (Eigen::Index i = 0; i < x.rows(); ++i) det = tess_mul(det, f.U.entry(i, i), x.params);
  return det;
}

std::vector<Eigen::MatrixXcd> channel_matrices(const TMat& x) {
  auto [xs, xd] = split_matrix(x);
  auto out = ca_to_splits(xs);
  auto d = ca_to_splits(xd);
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

GTMat g_from_channel_matrices(const std::vector<Eigen::MatrixXcd>& ch, const Params& p) {
  size_t half = p.four_real() ? 2 : 1;
  if (ch.size() != 2 * half) throw InvalidArgument("wrong number of channel matrices");
  std::vector<Eigen::MatrixXcd> s(ch.begin(), ch.begin() + half), d(ch.begin() + half, ch.end());
  return join_matrix(ca_from_splits(s, p.alpha()), ca_from_splits(d, p.alpha()), p);
}

TMat from_channel_matrices(const std::vector<Eigen::MatrixXcd>& ch, const Params& p) {
  return g_from_channel_matrices(ch, p).x1;
}

}  // namespace abtess
