#pragma once

#include <array>
#include <complex>
#include <utility>

#include "abtess/errors.hpp"

namespace abtess {

using cplx = std::complex<double>;

// Algebra parameters: i^2 = alpha, j^2 = beta, k = ij.
class Params {
 public:
  Params(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double sqrt_abs_alpha() const { return sa_; }
  double sqrt_beta() const { return sb_; }
  // 1 for alpha > 0, 2 for alpha < 0.
  int n() const { return alpha_ > 0 ? 1 : 2; }
  bool four_real() const { return alpha_ > 0; }
  int channel_count() const { return alpha_ > 0 ? 4 : 2; }

  bool operator==(const Params& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }
  bool operator!=(const Params& o) const { return !(*this == o); }

 private:
  double alpha_, beta_, sa_, sb_;
};

// Channel names used in diagnostics.
const char* channel_name(const Params& p, int channel);

struct Tessarine {
  double a = 0, b = 0, c = 0, d = 0;

  static Tessarine real(double v) { return {v, 0, 0, 0}; }
  double max_abs() const;
};

Tessarine operator+(const Tessarine& x, const Tessarine& y);
Tessarine operator-(const Tessarine& x, const Tessarine& y);
Tessarine operator-(const Tessarine& x);
Tessarine operator*(double s, const Tessarine& x);
Tessarine operator*(const Tessarine& x, double s);
Tessarine operator/(const Tessarine& x, double s);
bool operator==(const Tessarine& x, const Tessarine& y);

// x = x1 + x2*eps with eps^2 = -1, eps commuting with i, j, k.
struct GTessarine {
  Tessarine x1, x2;
};

struct AlphaComplex {
  double re = 0, im = 0;
};

AlphaComplex ac_mul(const AlphaComplex& x, const AlphaComplex& y, double alpha);

enum class Regime { TwoComplex, FourReal };

struct ChannelSet {
  Regime regime = Regime::FourReal;
  cplx ch_s, ch_d;            // TwoComplex
  std::array<double, 4> ch{};  // FourReal
};

enum class Axis { i, j, k };

std::pair<Tessarine, Tessarine> special_units(const Params& p);
Tessarine tess_mul(const Tessarine& x, const Tessarine& y, const Params& p);
Tessarine conjugate(const Tessarine& x, Axis axis);
Tessarine theta_tau(const Tessarine& x, double theta, double tau);
// The (3 - 2n, 1) conjugate used by the regime's Hermitian transpose.
Tessarine regime_conj(const Tessarine& x, const Params& p);
double s_sum(const Tessarine& x);

ChannelSet to_channels(const Tessarine& x, const Params& p);
Tessarine from_channels(const ChannelSet& ch, const Params& p);
// Channel values as complex numbers (real for alpha > 0), length channel_count().
std::array<cplx, 4> channel_values(const Tessarine& x, const Params& p);
Tessarine from_channel_values(const std::array<cplx, 4>& v, const Params& p);

Tessarine associated_tessarine(const Tessarine& x, const Params& p);
bool is_semipositive(const Tessarine& x, const Params& p);
bool tess_leq(const Tessarine& x, const Tessarine& y, const Params& p);

Tessarine tess_inverse(const Tessarine& x, const Params& p);
GTessarine tess_sqrt(const Tessarine& x, const Params& p);

// Channels of a generalized tessarine (alpha > 0): four complex values whose
// imaginary unit plays the role of eps.
std::array<cplx, 4> g_channels(const GTessarine& x, const Params& p);
GTessarine g_from_channels(const std::array<cplx, 4>& v, const Params& p);
GTessarine g_mul(const GTessarine& x, const GTessarine& y, const Params& p);
GTessarine g_inverse(const GTessarine& x, const Params& p);
// Drops the eps part; throws DomainError if it exceeds tol (relative).
Tessarine collapse(const GTessarine& x, double tol = 1e-10);

// Element a + b*eps + c*i + d*(eps i) of the (1, eps, i, eps i) subalgebra.
struct EpsHyper {
  double a = 0, b = 0, c = 0, d = 0;
};

// Relabels h as a + b i + c j + d k in the algebra with params (-1, alpha).
Tessarine equiv_tessarine(const EpsHyper& h);
EpsHyper from_equiv_tessarine(const Tessarine& x);
Params equiv_params(const Params& p);

// Sum of squared channel moduli / channel count (the 2-norm squared).
double norm2_sq(const Tessarine& x, const Params& p);

}  // namespace abtess
