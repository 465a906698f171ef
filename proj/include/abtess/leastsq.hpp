#pragma once

#include <vector>

#include "abtess/tmat.hpp"

namespace abtess {

struct LsSolution {
  TVec h, y_hat;
  double eps = 0;  // squared residual norm
};

// One stage of the sequential Toeplitz recursion.
//   f:    one-step coefficients; f[j-1] multiplies x(i+1-j), the last entry multiplies x(1)
//   g:    fixed-point coefficients; g[j-1] multiplies x(j+1) (empty at stage 1)
struct LevinsonStage {
  int i = 0;
  std::vector<Tessarine> f;
  Tessarine lambda;
  Tessarine eps1;
  std::vector<Tessarine> g;
  Tessarine eps2;
};

struct LevinsonTrace {
  Params params{1.0, 1.0};
  Tessarine pi0;  // pi(0) = eps1(0)
  std::vector<LevinsonStage> stages;  // stages[i-1] is stage i
};

LsSolution lstsq_normal(const TMat& x, const TVec& y);
LsSolution lstsq_pinv(const TMat& x, const TVec& y);

struct ToeplitzGram {
  TMat T;
  std::vector<Tessarine> pi;  // pi(0..p-1), first column of T
};

ToeplitzGram toeplitz_gram(const TMat& x);

// pi(i) for signed i, from the first-column values.
Tessarine pi_at(const std::vector<Tessarine>& pi, int i, const Params& p);

// Runs stages 1..stages (default p-1).
LevinsonTrace levinson_solve(const std::vector<Tessarine>& pi, const Params& p, int stages = -1);
// Stage prev->i + 1 from prev, or stage 1 when prev is null.
LevinsonStage levinson_next(const Params& p, const std::vector<Tessarine>& pi, const LevinsonStage* prev);
// Computes stage trace.stages.size() + 1 from the last one.
LevinsonStage levinson_step(const LevinsonTrace& trace, const std::vector<Tessarine>& pi);

struct FixedPoint {
  std::vector<Tessarine> g;
  Tessarine eps2;
};

FixedPoint fixed_point_projection(const LevinsonTrace& trace, int i);

}  // namespace abtess
