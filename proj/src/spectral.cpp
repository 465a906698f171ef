#include "abtess/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dense.hpp"

namespace abtess {

namespace {

void check_square(const TMat& x, const char* op) {
  if (x.rows() != x.cols()) throw ShapeError(std::string(op) + " needs a square matrix");
}

// 1 x p alpha-complex row holding a list of eigenvalues (plus eps part).
GCAMat value_row(const std::vector<AlphaComplex>& v, const std::vector<AlphaComplex>& eps, double alpha) {
  auto p = static_cast<Eigen::Index>(v.size());
  GCAMat out{CAMat(alpha, 1, p), CAMat(alpha, 1, p)};
  for (Eigen::Index n = 0; n < p; ++n) {
    out.x1.re(0, n) = v[n].re;
    out.x1.im(0, n) = v[n].im;
    out.x2.re(0, n) = eps[n].re;
    out.x2.im(0, n) = eps[n].im;
  }
  return out;
}

std::vector<GTessarine> row_entries(const GTMat& row) {
  std::vector<GTessarine> out;
  for (Eigen::Index n = 0; n < row.cols(); ++n) out.push_back(row.entry(0, n));
  return out;
}

std::vector<std::vector<int>> identity_pairing(const Params& p, Eigen::Index size) {
  std::vector<int> id(static_cast<size_t>(size));
  std::iota(id.begin(), id.end(), 0);
  return std::vector<std::vector<int>>(static_cast<size_t>(p.channel_count()), id);
}

// Channel eigenvalues of an n-Hermitian matrix, each sorted canonically.
std::vector<Eigen::VectorXd> hermitian_channel_spectra(const TMat& x) {
  std::vector<Eigen::VectorXd> out;
  for (const auto& ch : channel_matrices(x)) {
    if (x.params.four_real())
      out.push_back(dense::eig_hermitian(Eigen::MatrixXd(ch.real())).values);
    else
      out.push_back(dense::eig_hermitian(ch).values);
  }
  return out;
}

TMat take_cols(const TMat& x, Eigen::Index k) {
  return TMat(x.params, x.A.leftCols(k), x.B.leftCols(k), x.C.leftCols(k), x.D.leftCols(k));
}

}  // namespace

std::vector<Tessarine> EigenDecomp::tess_lambdas() const {
  std::vector<Tessarine> out;
  for (const auto& l : lambdas) out.push_back(collapse(l));
  return out;
}

Tessarine EigenDecomp::dominant() const { return collapse(lambdas.at(0)); }

std::vector<Eigen::MatrixXcd> g_channel_matrices(const GTMat& x) {
  auto a = channel_matrices(x.x1);
  if (!x.params().four_real()) return a;
  auto b = channel_matrices(x.x2);
  for (size_t n = 0; n < a.size(); ++n) a[n] += cplx(0, 1) * b[n];
  return a;
}

EigenDecomp eig(const TMat& x) {
  check_square(x, "eig");
  const Params& p = x.params;
  auto [xs, xd] = split_matrix(x);
  CAEig es = ca_eig(xs), ed = ca_eig(xd);
  EigenDecomp out;
  GTMat row = join_matrix(value_row(es.values, es.values_eps, p.alpha()),
                          value_row(ed.values, ed.values_eps, p.alpha()), p);
  out.lambdas = row_entries(row);
  out.U = join_matrix(GCAMat{es.vectors, es.vectors_eps}, GCAMat{ed.vectors, ed.vectors_eps}, p);
  out.pairing = identity_pairing(p, x.rows());
  // An eigenbasis exists iff every channel eigenvector matrix is invertible.
  auto chans = g_channel_matrices(out.U);
  for (size_t n = 0; n < chans.size(); ++n)
    if (dense::rcond(chans[n]) < 1e-12)
      throw DefectiveChannel("channel has no eigenbasis", channel_name(p, static_cast<int>(n)));
  try {
    if (p.four_real())
      out.U_aux = g_matrix_inverse(out.U);
    else
      out.U_aux = GTMat(inverse(out.U.x1));
  } catch (const Singular& e) {
    throw DefectiveChannel("eigenvector matrix is singular", e.channel());
  }
  return out;
}

EigenDecomp eig_hermitian(const TMat& x) {
  check_square(x, "eig_hermitian");
  const Params& p = x.params;
  if (!is_n_hermitian(x, p.n())) throw NotHermitian("matrix is not n-Hermitian for this regime");
  auto [xs, xd] = split_matrix(x);
  CAEig es = ca_eig_hermitian(xs), ed = ca_eig_hermitian(xd);
  EigenDecomp out;
  GTMat row = join_matrix(value_row(es.values, es.values_eps, p.alpha()),
                          value_row(ed.values, ed.values_eps, p.alpha()), p);
  out.lambdas = row_entries(row);
  TMat u = join_matrix(es.vectors, ed.vectors, p);
  out.U_aux = GTMat(hermitian_transpose(u));
  out.U = GTMat(u);
  out.hermitian = true;
  out.pairing = identity_pairing(p, x.rows());
  return out;
}

bool is_positive_definite(const TMat& x) {
  if (x.rows() != x.cols() || x.rows() == 0) return false;
  if (!is_n_hermitian(x, x.params.n())) return false;
  auto spectra = hermitian_channel_spectra(x);
  double scale = 0;
  for (const auto& s : spectra) scale = std::max(scale, s.cwiseAbs().maxCoeff());
  if (scale == 0.0) return false;
  for (const auto& s : spectra)
    if (s.minCoeff() <= 1e-12 * scale) return false;
  return true;
}

TMat pd_sqrt(const TMat& x) {
  if (!is_positive_definite(x)) throw NotPositiveDefinite("matrix is not positive definite");
  EigenDecomp e = eig_hermitian(x);
  std::vector<Tessarine> roots;
  for (const auto& l : e.tess_lambdas()) roots.push_back(collapse(tess_sqrt(l, x.params)));
  return mul(mul(e.U.x1, TMat::diagonal(x.params, roots)), e.U_aux.x1);
}

TVec normalize_vec(const TVec& x) {
  Tessarine m = modulus_vec(x, x.params.n());
  return scale(tess_inverse(m, x.params), x);
}

PowerResult power_method(const TMat& x, const TVec& x0, int max_iter, double tol) {
  check_square(x, "power_method");
  const Params& p = x.params;
  int n = p.n();
  if (x0.params != p || x0.cols() != 1 || x0.rows() != x.rows())
    throw ShapeError("power_method: seed must be a column matching the matrix");
  if (max_iter < 1) throw InvalidArgument("power_method: max_iter must be positive");
  if (!is_n_hermitian(x, n)) throw NotHermitian("power method needs an n-Hermitian matrix");
  Tessarine m0 = modulus_vec(x0, n);
  if ((m0 - Tessarine::real(1.0)).max_abs() > 1e-8) throw InvalidArgument("power_method: seed is not unit");

  PowerResult out;
  for (const auto& s : hermitian_channel_spectra(x)) {
    if (s.size() < 2) continue;
    double l1 = std::abs(s(0)), l2 = std::abs(s(1));
    if (l1 - l2 <= 1e-8 * l1) out.near_degenerate = true;
  }

  TVec v = x0;
  TVec xv = mul(x, v);
  for (int it = 1; it <= max_iter; ++it) {
    Tessarine mod = modulus_vec(xv, n);
    Tessarine inv;
    try {
      inv = tess_inverse(mod, p);
    } catch (const ZeroDivisor& e) {
      throw ZeroDivisor("power method iterate lost a channel at iteration " + std::to_string(it),
                        e.channel());
    }
    v = scale(inv, xv);
    xv = mul(x, v);
    Tessarine r = inner_product(v, xv, n);
    out.history.push_back(r);
    out.iterations = it;
    if (it > 1 && (r - out.history[out.history.size() - 2]).max_abs() < tol) {
      out.converged = true;
      break;
    }
  }
  out.lambda = out.history.back();
  out.x = v;
  return out;
}

SvdDecomp svd(const TMat& x, const std::vector<std::vector<int>>& perms) {
  const Params& p = x.params;
  size_t chans = static_cast<size_t>(p.channel_count());
  if (!perms.empty() && perms.size() != chans) throw InvalidArgument("svd: one permutation per channel expected");
  std::vector<std::vector<int>> ps, pd;
  if (!perms.empty()) {
    ps.assign(perms.begin(), perms.begin() + chans / 2);
    pd.assign(perms.begin() + chans / 2, perms.end());
  }
  auto [xs, xd] = split_matrix(x);
  CASvd ss = ca_svd(xs, ps), sd = ca_svd(xd, pd);
  SvdDecomp out;
  out.U = join_matrix(ss.U, sd.U, p);
  out.V = join_matrix(ss.V, sd.V, p);
  std::vector<AlphaComplex> zero(ss.sigmas.size());
  GTMat row = join_matrix(value_row(ss.sigmas, zero, p.alpha()), value_row(sd.sigmas, zero, p.alpha()), p);
  for (const auto& g : row_entries(row)) out.sigmas.push_back(g.x1);
  out.perms = perms.empty() ? identity_pairing(p, static_cast<Eigen::Index>(out.sigmas.size())) : perms;
  return out;
}

std::vector<Tessarine> singular_values(const TMat& x) { return svd(x).sigmas; }

namespace {

// Channel singular values, one vector per channel, and the overall largest one.
std::vector<std::vector<double>> channel_sigmas(const Params& p, const std::vector<Tessarine>& sig,
                                                double& top) {
  int m = p.channel_count();
  std::vector<std::vector<double>> out(static_cast<size_t>(m));
  top = 0;
  for (const auto& s : sig) {
    auto v = channel_values(s, p);
    for (int n = 0; n < m; ++n) {
      out[n].push_back(v[n].real());
      top = std::max(top, std::abs(v[n].real()));
    }
  }
  return out;
}

}  // namespace

int rank_of(const Params& p, const std::vector<Tessarine>& sigmas) {
  double top;
  auto ch = channel_sigmas(p, sigmas, top);
  if (top == 0.0) return 0;
  int best = 0;
  for (const auto& c : ch) {
    int cnt = static_cast<int>(std::count_if(c.begin(), c.end(), [&](double s) { return s > 1e-10 * top; }));
    best = std::max(best, cnt);
  }
  return best;
}

int rank(const TMat& x) { return rank_of(x.params, singular_values(x)); }

TMat svd_truncate(const SvdDecomp& s, int k) {
  const Params& p = s.U.params;
  int r = rank_of(p, s.sigmas);
  if (k < 1 || k > r) throw InvalidArgument("rank_k_approx: k must lie in [1, rank]");
  std::vector<Tessarine> d(s.sigmas.begin(), s.sigmas.begin() + k);
  TMat uk = take_cols(s.U, k);
  TMat vk = take_cols(s.V, k);
  return mul(mul(uk, TMat::diagonal(p, d)), hermitian_transpose(vk));
}

TMat rank_k_approx(const TMat& x, int k, const std::vector<std::vector<int>>& perms) {
  return svd_truncate(svd(x, perms), k);
}

TMat pseudoinverse(const TMat& x) {
  const Params& p = x.params;
  SvdDecomp s = svd(x);
  double top;
  auto ch = channel_sigmas(p, s.sigmas, top);
  // Channel pseudoinverses of Sigma (q x p), recombined into Q = P_s w1 + P_d w2.
  std::vector<Eigen::MatrixXcd> pinv;
  for (const auto& c : ch) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(x.cols(), x.rows());
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] > 1e-10 * top) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0 / c[i];
    pinv.push_back(m);
  }
  TMat q = from_channel_matrices(pinv, p);
  return mul(mul(s.V, q), hermitian_transpose(s.U));
}

}  // namespace abtess
