#include "abtess/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abtess/bench.hpp"
#include "abtess/image.hpp"
#include "abtess/leastsq.hpp"
#include "abtess/matrix_io.hpp"
#include "abtess/spectral.hpp"

namespace abtess {

namespace {

using nlohmann::json;

struct Opts {
  std::optional<double> alpha, beta;
  std::string format = "csv";
  std::string out;
  std::vector<std::string> inputs;
  int iters = 1000;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int k = 0;
  double mu = 0;
  std::string method;
  int p = 500, step = 25, repeats = 3, taps = 4;
  std::string host, mark;
};

Params override_params(const Params& base, const Opts& o) {
  return Params(o.alpha.value_or(base.alpha()), o.beta.value_or(base.beta()));
}

TMat with_params(const TMat& x, const Params& p) { return TMat(p, x.A, x.B, x.C, x.D); }

MatrixDoc load(const std::string& path, const Opts& o) {
  MatrixDoc doc = load_matrix(path);
  Params p = override_params(doc.value.params(), o);
  doc.value = GTMat(with_params(doc.value.x1, p), with_params(doc.value.x2, p));
  return doc;
}

std::string tess_cells(const Tessarine& t) {
  return format_number(t.a) + ',' + format_number(t.b) + ',' + format_number(t.c) + ',' + format_number(t.d);
}

json tess_json(const Tessarine& t) { return json::array({t.a, t.b, t.c, t.d}); }

std::string matrix_csv(const GTMat& x, bool generalized, const std::string& name = "") {
  std::ostringstream os;
  if (name.empty()) os << "row,col,a,b,c,d" << (generalized ? ",e,f,g,h" : "") << '\n';
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (!name.empty()) os << name << ',';
      os << i << ',' << j << ',' << tess_cells(x.x1.entry(i, j));
      if (generalized) os << ',' << tess_cells(x.x2.entry(i, j));
      os << '\n';
    }
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError(path + ": cannot open file for writing");
  f << text;
}

// Report text goes to --out when given, else to the stream.
void emit(const Opts& o, std::ostream& out, const std::string& text) {
  if (o.out.empty())
    out << text;
  else
    write_file(o.out, text);
}

void emit_matrix(const Opts& o, std::ostream& out, const GTMat& x, bool generalized) {
  if (o.format == "csv") {
    emit(o, out, matrix_csv(x, generalized));
  } else {
    emit(o, out, generalized ? to_json(x) : to_json(x.x1));
  }
}

bool needs_eps(const GTMat& x) { return x.params().alpha() > 0 && x.x2.max_abs() != 0.0; }

TVec random_unit(const Params& p, Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  TVec y(p, n, 1);
  for (Eigen::Index r = 0; r < n; ++r) y.set(r, 0, {g(rng), g(rng), g(rng), g(rng)});
  return normalize_vec(y);
}

int cmd_inv(const Opts& o, std::ostream& out) {
  MatrixDoc d = load(o.inputs.at(0), o);
  if (d.generalized) {
    GTMat r = g_matrix_inverse(d.value);
    emit_matrix(o, out, r, true);
  } else {
    emit_matrix(o, out, GTMat(inverse(d.value.x1)), false);
  }
  return 0;
}

int cmd_sqrt(const Opts& o, std::ostream& out) {
  GTMat r = sqrt(load(o.inputs.at(0), o).plain());
  emit_matrix(o, out, r, needs_eps(r));
  return 0;
}

int cmd_lu(const Opts& o, std::ostream& out) {
  TessLu lu = lu_pp(load(o.inputs.at(0), o).plain());
  if (o.format == "csv") {
    std::string text = "matrix,row,col,a,b,c,d\n";
    text += matrix_csv(GTMat(lu.P), false, "P") + matrix_csv(GTMat(lu.L), false, "L") +
            matrix_csv(GTMat(lu.U), false, "U");
    emit(o, out, text);
  } else {
    json j;
    j["gamma"] = lu.gamma;
    j["P"] = json::parse(to_json(lu.P));
    j["L"] = json::parse(to_json(lu.L));
    j["U"] = json::parse(to_json(lu.U));
    emit(o, out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_det(const Opts& o, std::ostream& out) {
  TMat x = load(o.inputs.at(0), o).plain();
  Tessarine d = o.method == "permutation" ? det_permutation(x) : det_lu(x);
  if (o.format == "csv")
    emit(o, out, format_tessarine(d) + "\n");
  else
    emit(o, out, json{{"det", tess_json(d)}}.dump() + "\n");
  return 0;
}

int cmd_eig(const Opts& o, std::ostream& out) {
  TMat x = load(o.inputs.at(0), o).plain();
  bool herm = is_n_hermitian(x, x.params.n());
  EigenDecomp e = herm ? eig_hermitian(x) : eig(x);
  if (o.format == "csv") {
    std::string text = "index,a,b,c,d,e,f,g,h\n";
    for (size_t i = 0; i < e.lambdas.size(); ++i)
      text += std::to_string(i) + ',' + tess_cells(e.lambdas[i].x1) + ',' + tess_cells(e.lambdas[i].x2) + '\n';
    emit(o, out, text);
  } else {
    json vals = json::array();
    for (const auto& l : e.lambdas) vals.push_back({{"value", tess_json(l.x1)}, {"eps", tess_json(l.x2)}});
    emit(o, out, json{{"hermitian", herm}, {"eigenvalues", vals}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_power(const Opts& o, std::ostream& out) {
  TMat x = load(o.inputs.at(0), o).plain();
  TVec x0 = o.inputs.size() > 1 ? normalize_vec(with_params(load(o.inputs[1], o).plain(), x.params))
                                 : random_unit(x.params, x.rows(), o.seed);
  PowerResult r = power_method(x, x0, o.iters, o.tol);
  if (o.format == "csv") {
    emit(o, out, "a,b,c,d,iterations,converged,near_degenerate\n" + tess_cells(r.lambda) + ',' +
                     std::to_string(r.iterations) + ',' + (r.converged ? "1" : "0") + ',' +
                     (r.near_degenerate ? "1" : "0") + '\n');
  } else {
    emit(o, out, json{{"lambda", tess_json(r.lambda)},
                      {"iterations", r.iterations},
                      {"converged", r.converged},
                      {"near_degenerate", r.near_degenerate}}
                         .dump(2) + "\n");
  }
  return 0;
}

std::string sigma_csv(const std::vector<Tessarine>& s) {
  std::string text = "index,a,b,c,d\n";
  for (size_t i = 0; i < s.size(); ++i) text += std::to_string(i) + ',' + tess_cells(s[i]) + '\n';
  return text;
}

int cmd_svd(const Opts& o, std::ostream& out) {
  SvdDecomp s = svd(load(o.inputs.at(0), o).plain());
  if (!o.out.empty()) {
    // --out is a prefix here: U and V go to their own documents.
    save_matrix(s.U, o.out + "_U.json");
    save_matrix(s.V, o.out + "_V.json");
  }
  if (o.format == "csv") {
    out << sigma_csv(s.sigmas);
  } else {
    json sig = json::array();
    for (const auto& v : s.sigmas) sig.push_back(tess_json(v));
    out << json{{"sigmas", sig}}.dump(2) << '\n';
  }
  return 0;
}

int cmd_rank(const Opts& o, std::ostream& out) {
  int r = rank(load(o.inputs.at(0), o).plain());
  emit(o, out, o.format == "csv" ? std::to_string(r) + "\n" : json{{"rank", r}}.dump() + "\n");
  return 0;
}

int cmd_pinv(const Opts& o, std::ostream& out) {
  emit_matrix(o, out, GTMat(pseudoinverse(load(o.inputs.at(0), o).plain())), false);
  return 0;
}

int cmd_lstsq(const Opts& o, std::ostream& out) {
  TMat x = load(o.inputs.at(0), o).plain();
  TVec y = with_params(load(o.inputs.at(1), o).plain(), x.params);
  LsSolution s = o.method == "pinv" ? lstsq_pinv(x, y) : lstsq_normal(x, y);
  if (o.format == "csv") {
    std::string text = "name,a,b,c,d\n";
    for (Eigen::Index i = 0; i < s.h.rows(); ++i) text += "h" + std::to_string(i) + ',' + tess_cells(s.h.entry(i, 0)) + '\n';
    text += "eps," + format_number(s.eps) + ",0,0,0\n";
    emit(o, out, text);
  } else {
    json h = json::array();
    for (Eigen::Index i = 0; i < s.h.rows(); ++i) h.push_back(tess_json(s.h.entry(i, 0)));
    emit(o, out, json{{"h", h}, {"eps", s.eps}}.dump(2) + "\n");
  }
  return 0;
}

int cmd_bench(const Opts& o, std::ostream& out, std::ostream& err) {
  BenchConfig cfg;
  cfg.params = Params(o.alpha.value_or(-2.0), o.beta.value_or(3.0));
  cfg.p_max = o.p;
  cfg.step = o.step;
  cfg.repeats = o.repeats;
  cfg.taps = o.taps;
  cfg.seed = o.seed;
  BenchReport r = levinson_bench(cfg);
  double gap = 0;
  for (const auto& row : r.rows) gap = std::max(gap, row.max_diff);
  err << "sequential, all stages: " << format_number(r.t_sequential_all) << " s; max coefficient gap "
      << format_number(gap) << '\n';
  if (o.format == "csv") {
    emit(o, out, bench_csv(r));
  } else {
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"i", row.i}, {"t_inverse", row.t_inverse}, {"t_pinv", row.t_pinv},
                      {"t_sequential", row.t_sequential}, {"max_diff", row.max_diff}});
    emit(o, out, json{{"rows", rows}, {"t_sequential_all", r.t_sequential_all}}.dump(2) + "\n");
  }
  return 0;
}

Params wm_params(const Opts& o) { return override_params(watermark_params(), o); }

int cmd_wm_embed(const Opts& o, std::ostream& out) {
  RgbImage host = read_png(o.inputs.at(0));
  RgbImage mark = read_png(o.inputs.at(1));
  TMat ab = wm_embed(host, mark, o.mu, wm_params(o));
  if (o.out.empty())
    out << to_json(ab);
  else
    save_matrix(ab, o.out);
  return 0;
}

int cmd_wm_extract(const Opts& o, std::ostream& out) {
  TMat ab = load(o.inputs.at(0), o).plain();
  WatermarkSplit parts = wm_extract(ab, o.k, o.mu);
  RgbImage host_hat = tessarine_to_image(parts.host);
  RgbImage mark_hat = tessarine_to_image(parts.mark);
  if (!o.out.empty()) {
    write_png(host_hat, o.out + "_host.png");
    write_png(mark_hat, o.out + "_mark.png");
  }
  std::string text = "k,mu,psnr_host,psnr_mark\n" + std::to_string(o.k) + ',' + format_number(o.mu) + ',';
  text += o.host.empty() ? "" : format_number(psnr(read_png(o.host), host_hat));
  text += ',';
  text += o.mark.empty() ? "" : format_number(psnr(read_png(o.mark), mark_hat));
  out << text << '\n';
  return 0;
}

int cmd_psnr(const Opts& o, std::ostream& out) {
  double v = psnr(read_png(o.inputs.at(0)), read_png(o.inputs.at(1)));
  emit(o, out, format_number(v) + "\n");
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix algebra over commutative tessarines"};
  app.require_subcommand(1);
  Opts o;

  auto common = [&](CLI::App* sub, int n_inputs, const std::string& what) {
    sub->add_option("inputs", o.inputs, what)->required()->expected(n_inputs);
    sub->add_option("--alpha", o.alpha, "override alpha");
    sub->add_option("--beta", o.beta, "override beta");
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output path");
    return sub;
  };

  common(app.add_subcommand("inv", "inverse"), 1, "matrix document");
  common(app.add_subcommand("sqrt", "square root"), 1, "matrix document");
  common(app.add_subcommand("lu", "LU with partial pivoting"), 1, "matrix document");
  auto* det = common(app.add_subcommand("det", "determinant"), 1, "matrix document");
  det->add_option("--method", o.method, "lu or permutation")->check(CLI::IsMember({"lu", "permutation"}));
  common(app.add_subcommand("eig", "eigenvalues"), 1, "matrix document");
  auto* power = app.add_subcommand("power", "power method");
  power->add_option("inputs", o.inputs, "matrix document [seed vector document]")->required()->expected(1, 2);
  power->add_option("--alpha", o.alpha, "override alpha");
  power->add_option("--beta", o.beta, "override beta");
  power->add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  power->add_option("--out", o.out, "output path");
  power->add_option("--iters", o.iters, "iteration cap")->check(CLI::PositiveNumber);
  power->add_option("--tol", o.tol, "stop when the eigenvalue moves less than this")->check(CLI::NonNegativeNumber);
  power->add_option("--seed", o.seed, "seed for a random start vector")->envname("ABTESS_SEED");
  common(app.add_subcommand("svd", "singular values; --out PREFIX also writes U and V"), 1, "matrix document");
  common(app.add_subcommand("rank", "rank"), 1, "matrix document");
  common(app.add_subcommand("pinv", "Moore-Penrose inverse"), 1, "matrix document");
  auto* lstsq = common(app.add_subcommand("lstsq", "least squares X h = y"), 2, "X document, y document");
  lstsq->add_option("--method", o.method, "normal or pinv")->check(CLI::IsMember({"normal", "pinv"}));

  auto* bench = app.add_subcommand("levinson-bench", "time sequential vs direct Toeplitz solves");
  bench->add_option("--alpha", o.alpha, "alpha (default -2)");
  bench->add_option("--beta", o.beta, "beta (default 3)");
  bench->add_option("--p", o.p, "largest order")->check(CLI::Range(2, kBenchMaxP));
  bench->add_option("--step", o.step, "sample every step stages")->check(CLI::PositiveNumber);
  bench->add_option("--repeats", o.repeats, "timing repeats")->check(CLI::PositiveNumber);
  bench->add_option("--taps", o.taps, "filter length")->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "instance seed")->envname("ABTESS_SEED");
  bench->add_option("--format", o.format, "report format")->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", o.out, "output path");

  auto* embed = app.add_subcommand("wm-embed", "A + mu B as a matrix document");
  embed->add_option("inputs", o.inputs, "host PNG, mark PNG")->required()->expected(2);
  embed->add_option("--mu", o.mu, "mark strength")->required()->check(CLI::PositiveNumber);
  embed->add_option("--alpha", o.alpha, "alpha (default 3)");
  embed->add_option("--beta", o.beta, "beta (default 1)");
  embed->add_option("--out", o.out, "output document");

  auto* extract = app.add_subcommand("wm-extract", "rank-k split of an embedded document");
  extract->add_option("inputs", o.inputs, "embedded document")->required()->expected(1);
  extract->add_option("--k", o.k, "rank")->required()->check(CLI::PositiveNumber);
  extract->add_option("--mu", o.mu, "mark strength")->required()->check(CLI::PositiveNumber);
  extract->add_option("--out", o.out, "prefix for the _host.png and _mark.png outputs");
  extract->add_option("--host", o.host, "original host PNG, for PSNR");
  extract->add_option("--mark", o.mark, "original mark PNG, for PSNR");

  auto* ps = app.add_subcommand("psnr", "PSNR of two PNGs");
  ps->add_option("inputs", o.inputs, "two PNGs")->required()->expected(2);
  ps->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();
    if (name == "inv") return cmd_inv(o, out);
    if (name == "sqrt") return cmd_sqrt(o, out);
    if (name == "lu") return cmd_lu(o, out);
    if (name == "det") return cmd_det(o, out);
    if (name == "eig") return cmd_eig(o, out);
    if (name == "power") return cmd_power(o, out);
    if (name == "svd") return cmd_svd(o, out);
    if (name == "rank") return cmd_rank(o, out);
    if (name == "pinv") return cmd_pinv(o, out);
    if (name == "lstsq") return cmd_lstsq(o, out);
    if (name == "levinson-bench") return cmd_bench(o, out, err);
    if (name == "wm-embed") return cmd_wm_embed(o, out);
    if (name == "wm-extract") return cmd_wm_extract(o, out);
    if (name == "psnr") return cmd_psnr(o, out);
    err << "usage error: unknown command " << name << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace abtess
