#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abtess/leastsq.hpp"

namespace abtess {

// Data matrix whose columns are shifted copies of a short filter, zero padded so that the
// Gram matrix is exactly Toeplitz. Filter taps are drawn per channel with a dominant lead tap,
// which keeps every channel spectrum away from zero.
struct ToeplitzInstance {
  TMat X;                     // (p + taps - 1) x p
  std::vector<Tessarine> h;   // filter taps
};

ToeplitzInstance make_toeplitz_instance(const Params& params, int p, int taps, std::uint64_t seed);

// Closed-form pi(0..p-1) of the instance, from the filter autocorrelation.
std::vector<Tessarine> instance_pi(const ToeplitzInstance& inst, const Params& params);

struct BenchConfig {
  Params params{-2.0, 3.0};
  int p_max = 500;
  int step = 25;
  int repeats = 3;
  int taps = 4;
  std::uint64_t seed = 1;
};

struct BenchRow {
  int i = 0;
  double t_inverse = 0, t_pinv = 0, t_sequential = 0;  // seconds, best of the repeats
  double max_diff = 0;  // largest coefficient gap between the three routes
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double t_sequential_all = 0;  // one recursion through every stage up to p_max
};

inline constexpr int kBenchMaxP = 500;

BenchReport levinson_bench(const BenchConfig& cfg);
// Columns i,t_inverse,t_pinv,t_sequential.
std::string bench_csv(const BenchReport& r);

}  // namespace abtess
