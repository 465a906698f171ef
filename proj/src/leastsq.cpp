#include "abtess/leastsq.hpp"

#include <algorithm>
#include <string>

#include "abtess/spectral.hpp"

namespace abtess {

namespace {

void check_system(const TMat& x, const TVec& y) {
  if (x.params != y.params) throw ShapeError("least squares: params differ");
  if (y.cols() != 1 || y.rows() != x.rows()) throw ShapeError("least squares: y must be a column with rows(X) entries");
}

double residual_eps(const TVec& y, const TVec& y_hat) {
  int n = y.params.n();
  return inner_product(y, y, n).a - inner_product(y, y_hat, n).a;
}

}  // namespace

LsSolution lstsq_normal(const TMat& x, const TVec& y) {
  check_system(x, y);
  TMat xh = hermitian_transpose(x);
  TMat g = inverse(mul(xh, x));
  LsSolution out;
  out.h = mul(g, mul(xh, y));
  out.y_hat = mul(x, out.h);
  out.eps = residual_eps(y, out.y_hat);
  return out;
}

LsSolution lstsq_pinv(const TMat& x, const TVec& y) {
  check_system(x, y);
  LsSolution out;
  out.h = mul(pseudoinverse(x), y);
  out.y_hat = mul(x, out.h);
  out.eps = residual_eps(y, out.y_hat);
  return out;
}

ToeplitzGram toeplitz_gram(const TMat& x) {
  TMat t = mul(hermitian_transpose(x), x);
  double tol = 1e-10 * std::max(t.max_abs(), 1e-300);
  if (sub(t, hermitian_transpose(t)).max_abs() > tol)
    throw NotToeplitz("Gram matrix is not n-Hermitian");
  auto p = t.rows();
  for (Eigen::Index i = 0; i + 1 < p; ++i)
    for (Eigen::Index j = 0; j + 1 < p; ++j)
      if ((t.entry(i, j) - t.entry(i + 1, j + 1)).max_abs() > tol)
        throw NotToeplitz("Gram matrix breaks Toeplitz structure at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  ToeplitzGram out{t, {}};
  for (Eigen::Index i = 0; i < p; ++i) out.pi.push_back(t.entry(i, 0));
  return out;
}

Tessarine pi_at(const std::vector<Tessarine>& pi, int i, const Params& p) {
  if (i >= 0) return pi.at(static_cast<size_t>(i));
  return regime_conj(pi.at(static_cast<size_t>(-i)), p);
}

LevinsonStage levinson_next(const Params& p, const std::vector<Tessarine>& pi, const LevinsonStage* prev) {
  int i = prev ? prev->i + 1 : 1;
  if (i > static_cast<int>(pi.size()) - 1) throw InvalidArgument("levinson: not enough pi values for stage " + std::to_string(i));
  Tessarine eps_prev = prev ? prev->eps1 : pi.at(0);
  Tessarine inv;
  try {
    inv = tess_inverse(eps_prev, p);
  } catch (const ZeroDivisor& e) {
    throw ZeroDivisor("levinson: error term vanished before stage " + std::to_string(i), e.channel());
  }
  LevinsonStage s;
  s.i = i;
  if (i == 1) {
    s.lambda = tess_mul(pi_at(pi, -1, p), inv, p);
    s.f = {s.lambda};
    s.eps2 = pi[0];
  } else {
    const auto& fp = prev->f;
    // Fixed-point coefficients come from the previous one-step ones.
    s.g.reserve(fp.size());
    for (const auto& v : fp) s.g.push_back(regime_conj(v, p));
    s.eps2 = eps_prev;
    Tessarine acc = pi_at(pi, -i, p);
    for (int j = 1; j <= i - 1; ++j) acc = acc - tess_mul(pi_at(pi, j - i, p), fp[j - 1], p);
    s.lambda = tess_mul(acc, inv, p);
    // rho is g reversed: rho[j-1] = g(i-j).
    s.f.resize(static_cast<size_t>(i));
    for (int j = 1; j <= i - 1; ++j) s.f[j - 1] = fp[j - 1] - tess_mul(s.lambda, s.g[i - 1 - j], p);
    s.f[i - 1] = s.lambda;
  }
  s.eps1 = tess_mul(eps_prev, Tessarine::real(1.0) - tess_mul(s.lambda, regime_conj(s.lambda, p), p), p);
  return s;
}

LevinsonStage levinson_step(const LevinsonTrace& trace, const std::vector<Tessarine>& pi) {
  return levinson_next(trace.params, pi, trace.stages.empty() ? nullptr : &trace.stages.back());
}

LevinsonTrace levinson_solve(const std::vector<Tessarine>& pi, const Params& p, int stages) {
  if (pi.empty()) throw InvalidArgument("levinson: pi is empty");
  int max_stage = static_cast<int>(pi.size()) - 1;
  if (stages < 0) stages = max_stage;
  if (stages > max_stage) throw InvalidArgument("levinson: stages exceed available pi values");
  LevinsonTrace trace;
  trace.params = p;
  trace.pi0 = pi[0];
  trace.stages.reserve(static_cast<size_t>(stages));
  for (int i = 1; i <= stages; ++i) trace.stages.push_back(levinson_step(trace, pi));
  return trace;
}

FixedPoint fixed_point_projection(const LevinsonTrace& trace, int i) {
  if (i < 2 || i - 1 > static_cast<int>(trace.stages.size()))
    throw InvalidArgument("fixed_point_projection: stage " + std::to_string(i) + " out of range");
  const LevinsonStage& prev = trace.stages[static_cast<size_t>(i - 2)];
  FixedPoint out;
  for (const auto& v : prev.f) out.g.push_back(regime_conj(v, trace.params));
  out.eps2 = prev.eps1;
  return out;
}

}  // namespace abtess
