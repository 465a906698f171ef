#include "abtess/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "abtess/matrix_io.hpp"

namespace abtess {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

TMat block(const TMat& x, Eigen::Index r0, Eigen::Index c0, Eigen::Index nr, Eigen::Index nc) {
  return TMat(x.params, x.A.block(r0, c0, nr, nc), x.B.block(r0, c0, nr, nc), x.C.block(r0, c0, nr, nc),
              x.D.block(r0, c0, nr, nc));
}

double coeff_gap(const TVec& h, const std::vector<Tessarine>& g) {
  double gap = 0;
  for (size_t j = 0; j < g.size(); ++j)
    gap = std::max(gap, (h.entry(static_cast<Eigen::Index>(j), 0) - g[j]).max_abs());
  return gap;
}

volatile double sink = 0;

}  // namespace

ToeplitzInstance make_toeplitz_instance(const Params& params, int p, int taps, std::uint64_t seed) {
  if (p < 1) throw InvalidArgument("toeplitz instance: p must be positive");
  if (taps < 1) throw InvalidArgument("toeplitz instance: taps must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  // Lead tap channels near 1, the rest sum to at most 0.5 in modulus: channel spectra stay in [0.4, 1.6].
  int m = params.channel_count();
  bool complex_ch = params.alpha() < 0;
  double tail = taps > 1 ? 0.5 / (taps - 1) : 0.0;
  ToeplitzInstance out;
  for (int t = 0; t < taps; ++t) {
    std::array<cplx, 4> v{};
    for (int n = 0; n < m; ++n) {
      cplx z(unit(rng), complex_ch ? unit(rng) : 0.0);
      if (t == 0) {
        v[n] = 1.0 + 0.1 * z;
      } else {
        double r = std::abs(z);
        v[n] = r > 1.0 ? tail * z / r : tail * z;
      }
    }
    out.h.push_back(from_channel_values(v, params));
  }
  out.X = TMat(params, p + taps - 1, p);
  for (int c = 0; c < p; ++c)
    for (int t = 0; t < taps; ++t) out.X.set(c + t, c, out.h[t]);
  return out;
}

std::vector<Tessarine> instance_pi(const ToeplitzInstance& inst, const Params& params) {
  int p = static_cast<int>(inst.X.cols());
  int taps = static_cast<int>(inst.h.size());
  std::vector<Tessarine> pi(static_cast<size_t>(p));
  // pi(i) = sum_m h[m]^* h[m+i]
  for (int i = 0; i < p; ++i)
    for (int m = 0; m + i < taps; ++m)
      pi[i] = pi[i] + tess_mul(regime_conj(inst.h[m], params), inst.h[m + i], params);
  return pi;
}

BenchReport levinson_bench(const BenchConfig& cfg) {
  if (cfg.p_max < 2 || cfg.p_max > kBenchMaxP)
    throw InvalidArgument("levinson bench: p must lie in [2, " + std::to_string(kBenchMaxP) + "]");
  if (cfg.step < 1) throw InvalidArgument("levinson bench: step must be positive");
  if (cfg.repeats < 1) throw InvalidArgument("levinson bench: repeats must be positive");
  const Params& p = cfg.params;
  ToeplitzInstance inst = make_toeplitz_instance(p, cfg.p_max, cfg.taps, cfg.seed);
  std::vector<Tessarine> pi = instance_pi(inst, p);

  BenchReport rep;
  // Whole recursion, every stage, best of the repeats.
  rep.t_sequential_all = INFINITY;
  LevinsonTrace trace;
  for (int r = 0; r < cfg.repeats; ++r) {
    auto t0 = Clock::now();
    trace = levinson_solve(pi, p, cfg.p_max - 1);
    FixedPoint fp = fixed_point_projection(trace, cfg.p_max);
    rep.t_sequential_all = std::min(rep.t_sequential_all, seconds_since(t0));
    sink = sink + fp.g.back().a;
  }

  std::vector<int> stages;
  for (int i = cfg.step; i <= cfg.p_max; i += cfg.step)
    if (i >= 2) stages.push_back(i);
  if (stages.empty() || stages.back() != cfg.p_max) stages.push_back(cfg.p_max);

  for (int i : stages) {
    BenchRow row;
    row.i = i;
    Eigen::Index rows = i + cfg.taps - 1;
    TMat x2 = block(inst.X, 0, 1, rows, i - 1);
    TVec x1 = block(inst.X, 0, 0, rows, 1);
    FixedPoint ref = fixed_point_projection(trace, i);

    LsSolution a, b;
    row.t_inverse = row.t_pinv = INFINITY;
    for (int r = 0; r < cfg.repeats; ++r) {
      auto t0 = Clock::now();
      a = lstsq_normal(x2, x1);
      row.t_inverse = std::min(row.t_inverse, seconds_since(t0));
      t0 = Clock::now();
      b = lstsq_pinv(x2, x1);
      row.t_pinv = std::min(row.t_pinv, seconds_since(t0));
    }
    row.max_diff = std::max(coeff_gap(a.h, ref.g), coeff_gap(b.h, ref.g));
    rep.rows.push_back(row);
  }

  // Incremental cost of stage i: one recursion step from stage i-2, then the conjugation.
  // A stage costs microseconds and host speed drifts, so the stages are timed
  // round-robin in ~1 ms batches and each keeps its fastest batch.
  auto step_once = [&](int i) {
    const LevinsonStage* prev = i >= 3 ? &trace.stages[static_cast<size_t>(i - 3)] : nullptr;
    LevinsonStage s = levinson_next(p, pi, prev);
    double acc = 0;
    for (const auto& v : s.f) acc += regime_conj(v, p).d;
    sink = sink + acc;
  };
  std::vector<long> batch(stages.size(), 1);
  for (size_t n = 0; n < stages.size(); ++n) {
    rep.rows[n].t_sequential = INFINITY;
    for (;;) {
      auto t0 = Clock::now();
      for (long b = 0; b < batch[n]; ++b) step_once(stages[n]);
      if (seconds_since(t0) >= 1e-3 || batch[n] >= (1L << 24)) break;
      batch[n] *= 2;
    }
  }
  // Slow spells last seconds, so keep sampling for a couple of seconds per repeat.
  auto phase = Clock::now();
  for (int r = 0; r < 20 * cfg.repeats || seconds_since(phase) < 2.0 * cfg.repeats; ++r)
    for (size_t n = 0; n < stages.size(); ++n) {
      auto t0 = Clock::now();
      for (long b = 0; b < batch[n]; ++b) step_once(stages[n]);
      double t = seconds_since(t0) / static_cast<double>(batch[n]);
      rep.rows[n].t_sequential = std::min(rep.rows[n].t_sequential, t);
    }
  return rep;
}

std::string bench_csv(const BenchReport& r) {
  std::ostringstream os;
  os << "i,t_inverse,t_pinv,t_sequential\n";
  for (const auto& row : r.rows)
    os << row.i << ',' << format_number(row.t_inverse) << ',' << format_number(row.t_pinv) << ','
       << format_number(row.t_sequential) << '\n';
  return os.str();
}

}  // namespace abtess
