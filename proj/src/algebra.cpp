#include "abtess/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abtess {

Params::Params(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || alpha == 0.0)
    throw InvalidArgument("alpha must be finite and nonzero");
  if (!std::isfinite(beta) || !(beta > 0.0))
    throw InvalidArgument("beta must be finite and positive");
  sa_ = std::sqrt(std::abs(alpha));
  sb_ = std::sqrt(beta);
}

const char* channel_name(const Params& p, int channel) {
  static const char* two[] = {"ch_s", "ch_d"};
  static const char* four[] = {"ch1", "ch2", "ch3", "ch4"};
  return p.four_real() ? four[channel] : two[channel];
}

double Tessarine::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Tessarine operator+(const Tessarine& x, const Tessarine& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}
Tessarine operator-(const Tessarine& x, const Tessarine& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}
Tessarine operator-(const Tessarine& x) { return {-x.a, -x.b, -x.c, -x.d}; }
Tessarine operator*(double s, const Tessarine& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
Tessarine operator*(const Tessarine& x, double s) { return s * x; }
Tessarine operator/(const Tessarine& x, double s) { return {x.a / s, x.b / s, x.c / s, x.d / s}; }
bool operator==(const Tessarine& x, const Tessarine& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

AlphaComplex ac_mul(const AlphaComplex& x, const AlphaComplex& y, double alpha) {
  return {x.re * y.re + alpha * x.im * y.im, x.re * y.im + x.im * y.re};
}

std::pair<Tessarine, Tessarine> special_units(const Params& p) {
  double sb = p.sqrt_beta();
  double h = 1.0 / (2.0 * sb);
  return {{0.5, 0, h, 0}, {0.5, 0, -h, 0}};
}

Tessarine tess_mul(const Tessarine& x, const Tessarine& y, const Params& p) {
  double al = p.alpha(), be = p.beta();
  return {x.a * y.a + al * x.b * y.b + be * x.c * y.c + al * be * x.d * y.d,
          x.a * y.b + x.b * y.a + be * (x.c * y.d + x.d * y.c),
          x.a * y.c + x.c * y.a + al * (x.b * y.d + x.d * y.b),
          x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b};
}

Tessarine conjugate(const Tessarine& x, Axis axis) {
  switch (axis) {
    case Axis::i: return {x.a, x.b, -x.c, -x.d};
    case Axis::j: return {x.a, -x.b, x.c, -x.d};
    case Axis::k: return {x.a, -x.b, -x.c, x.d};
  }
  return x;
}

Tessarine theta_tau(const Tessarine& x, double theta, double tau) {
  if (theta == 0.0) throw InvalidArgument("theta must be nonzero");
  if (!(tau > 0.0)) throw InvalidArgument("tau must be positive");
  return {x.a, x.b / theta, x.c / tau, x.d / (tau * theta)};
}

Tessarine regime_conj(const Tessarine& x, const Params& p) {
  if (p.four_real()) return x;
  return {x.a, -x.b, x.c, -x.d};
}

double s_sum(const Tessarine& x) { return x.a + x.b + x.c + x.d; }

std::array<cplx, 4> channel_values(const Tessarine& x, const Params& p) {
  double sb = p.sqrt_beta(), sa = p.sqrt_abs_alpha();
  if (!p.four_real()) {
    return {cplx(x.a + sb * x.c, (x.b + sb * x.d) * sa),
            cplx(x.a - sb * x.c, (x.b - sb * x.d) * sa), 0.0, 0.0};
  }
  double sab = sa * sb;
  return {cplx(x.a + sa * x.b + sb * x.c + sab * x.d), cplx(x.a - sa * x.b + sb * x.c - sab * x.d),
          cplx(x.a + sa * x.b - sb * x.c - sab * x.d), cplx(x.a - sa * x.b - sb * x.c + sab * x.d)};
}

namespace {

// Inverse of the alpha > 0 channel map applied to one real quartet.
Tessarine four_to_tess(double c1, double c2, double c3, double c4, const Params& p) {
  double sa = p.sqrt_abs_alpha(), sb = p.sqrt_beta();
  return {(c1 + c2 + c3 + c4) / 4.0, (c1 - c2 + c3 - c4) / (4.0 * sa),
          (c1 + c2 - c3 - c4) / (4.0 * sb), (c1 - c2 - c3 + c4) / (4.0 * sa * sb)};
}

Tessarine two_to_tess(cplx s, cplx d, const Params& p) {
  double sa = p.sqrt_abs_alpha(), sb = p.sqrt_beta();
  return {(s.real() + d.real()) / 2.0, (s.imag() + d.imag()) / (2.0 * sa),
          (s.real() - d.real()) / (2.0 * sb), (s.imag() - d.imag()) / (2.0 * sa * sb)};
}

}  // namespace

Tessarine from_channel_values(const std::array<cplx, 4>& v, const Params& p) {
  if (!p.four_real()) return two_to_tess(v[0], v[1], p);
  return four_to_tess(v[0].real(), v[1].real(), v[2].real(), v[3].real(), p);
}

ChannelSet to_channels(const Tessarine& x, const Params& p) {
  auto v = channel_values(x, p);
  ChannelSet out;
  if (p.four_real()) {
    out.regime = Regime::FourReal;
    for (int n = 0; n < 4; ++n) out.ch[n] = v[n].real();
  } else {
    out.regime = Regime::TwoComplex;
    out.ch_s = v[0];
    out.ch_d = v[1];
  }
  return out;
}

Tessarine from_channels(const ChannelSet& ch, const Params& p) {
  bool four = ch.regime == Regime::FourReal;
  if (four != p.four_real()) throw InvalidArgument("channel regime does not match sign of alpha");
  if (four) return four_to_tess(ch.ch[0], ch.ch[1], ch.ch[2], ch.ch[3], p);
  return two_to_tess(ch.ch_s, ch.ch_d, p);
}

Tessarine associated_tessarine(const Tessarine& x, const Params& p) {
  if (p.four_real()) {
    auto v = channel_values(x, p);
    return {v[0].real(), v[1].real(), v[2].real(), v[3].real()};
  }
  double scale = x.max_abs();
  if (std::abs(x.b) > 1e-12 * scale || std::abs(x.d) > 1e-12 * scale)
    throw DomainError("associated tessarine for alpha < 0 needs zero i and k parts");
  double sb = p.sqrt_beta();
  return {x.a + sb * x.c, 0.0, x.a - sb * x.c, 0.0};
}

bool is_semipositive(const Tessarine& x, const Params& p) {
  Tessarine t = associated_tessarine(x, p);
  double scale = std::max(t.max_abs(), x.max_abs());
  double floor = -1e-12 * scale;
  return t.a >= floor && t.b >= floor && t.c >= floor && t.d >= floor;
}

bool tess_leq(const Tessarine& x, const Tessarine& y, const Params& p) {
  return is_semipositive(y - x, p);
}

Tessarine tess_inverse(const Tessarine& x, const Params& p) {
  auto v = channel_values(x, p);
  int m = p.channel_count();
  double top = 0;
  for (int n = 0; n < m; ++n) top = std::max(top, std::abs(v[n]));
  for (int n = 0; n < m; ++n) {
    if (std::abs(v[n]) <= 1e-13 * top || top == 0.0)
      throw ZeroDivisor("tessarine has a vanishing channel", channel_name(p, n));
    v[n] = 1.0 / v[n];
  }
  return from_channel_values(v, p);
}

namespace {

// Principal root: nonnegative real part; a negative real maps to the +imaginary axis.
cplx principal_sqrt(cplx z) {
  if (z.imag() == 0.0) {
    if (z.real() >= 0) return {std::sqrt(z.real()), 0.0};
    return {0.0, std::sqrt(-z.real())};
  }
  return std::sqrt(z);
}

}  // namespace

GTessarine tess_sqrt(const Tessarine& x, const Params& p) {
  auto v = channel_values(x, p);
  if (!p.four_real()) {
    v[0] = principal_sqrt(v[0]);
    v[1] = principal_sqrt(v[1]);
    return {from_channel_values(v, p), Tessarine{}};
  }
  for (auto& z : v) z = principal_sqrt(z);
  return g_from_channels(v, p);
}

std::array<cplx, 4> g_channels(const GTessarine& x, const Params& p) {
  if (!p.four_real()) throw DomainError("generalized arithmetic needs alpha > 0");
  auto r = channel_values(x.x1, p);
  auto e = channel_values(x.x2, p);
  return {cplx(r[0].real(), e[0].real()), cplx(r[1].real(), e[1].real()),
          cplx(r[2].real(), e[2].real()), cplx(r[3].real(), e[3].real())};
}

GTessarine g_from_channels(const std::array<cplx, 4>& v, const Params& p) {
  return {four_to_tess(v[0].real(), v[1].real(), v[2].real(), v[3].real(), p),
          four_to_tess(v[0].imag(), v[1].imag(), v[2].imag(), v[3].imag(), p)};
}

GTessarine g_mul(const GTessarine& x, const GTessarine& y, const Params& p) {
  auto u = g_channels(x, p);
  auto v = g_channels(y, p);
  for (int n = 0; n < 4; ++n) u[n] *= v[n];
  return g_from_channels(u, p);
}

GTessarine g_inverse(const GTessarine& x, const Params& p) {
  auto v = g_channels(x, p);
  double top = 0;
  for (auto& z : v) top = std::max(top, std::abs(z));
  for (int n = 0; n < 4; ++n) {
    if (std::abs(v[n]) <= 1e-13 * top || top == 0.0)
      throw ZeroDivisor("generalized tessarine has a vanishing channel", channel_name(p, n));
    // 1/(u + v eps) = (u - v eps)/(u^2 + v^2)
    double den = std::norm(v[n]);
    v[n] = cplx(v[n].real() / den, -v[n].imag() / den);
  }
  return g_from_channels(v, p);
}

Tessarine collapse(const GTessarine& x, double tol) {
  double scale = std::max(1.0, x.x1.max_abs());
  if (x.x2.max_abs() > tol * scale)
    throw DomainError("eps part " + std::to_string(x.x2.max_abs()) + " too large to collapse");
  return x.x1;
}

Tessarine equiv_tessarine(const EpsHyper& h) { return {h.a, h.b, h.c, h.d}; }

EpsHyper from_equiv_tessarine(const Tessarine& x) { return {x.a, x.b, x.c, x.d}; }

Params equiv_params(const Params& p) {
  if (!p.four_real()) throw DomainError("generalized arithmetic needs alpha > 0");
  return Params(-1.0, p.alpha());
}

double norm2_sq(const Tessarine& x, const Params& p) {
  auto v = channel_values(x, p);
  int m = p.channel_count();
  double s = 0;
  for (int n = 0; n < m; ++n) s += std::norm(v[n]);
  return s / m;
}

}  // namespace abtess
