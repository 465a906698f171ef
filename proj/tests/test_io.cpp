#include <gtest/gtest.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abtess/cli.hpp"
#include "abtess/image.hpp"
#include "abtess/matrix_io.hpp"
#include "abtess/spectral.hpp"
#include "support.hpp"

using namespace abtess;
using abtess::test::Rng;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("abtess_io_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "abtess");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

RgbImage noise_image(int w, int h, std::uint64_t seed) {
  Rng r(seed);
  RgbImage img(w, h);
  for (auto& v : img.data) v = static_cast<std::uint8_t>(r.integer(0, 255));
  return img;
}

}  // namespace

TEST(MatrixIo, RoundTripBitExact) {
  Rng r(70);
  for (const Params& p : {Params(-2.0, 3.0), Params(0.1, 7.3)}) {
    TMat x = r.mat(p, 3, 4);
    x.set(0, 0, {1e-300, -0.1, 1.0 / 3.0, 12345.678901234567});
    MatrixDoc d = from_json(to_json(x));
    EXPECT_FALSE(d.generalized);
    TMat y = d.plain();
    EXPECT_EQ(y.params, p);
    EXPECT_TRUE((y.A.array() == x.A.array()).all());
    EXPECT_TRUE((y.D.array() == x.D.array()).all());
    GTMat g(x, r.mat(p, 3, 4));
    MatrixDoc gd = from_json(to_json(g));
    EXPECT_TRUE(gd.generalized);
    EXPECT_TRUE((gd.value.x2.C.array() == g.x2.C.array()).all());
    EXPECT_THROW(gd.plain(), ValidationError);
  }
}

TEST(MatrixIo, Errors) {
  const std::string good = R"({"alpha": 2, "beta": 1, "rows": 1, "cols": 2, "a": [[1, 2]], "b": [[0, 0]], "c": [[0, 0]])";
  try {
    from_json(good + "}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("\"d\""), std::string::npos);
  }
  const std::string full = good + R"(, "d": [[0, 0]]})";
  EXPECT_NO_THROW(from_json(full));
  std::string zero = full;
  zero.replace(zero.find("\"alpha\": 2"), 10, "\"alpha\": 0");
  EXPECT_THROW(from_json(zero), ValidationError);
  std::string shape = full;
  shape.replace(shape.find("\"cols\": 2"), 9, "\"cols\": 3");
  EXPECT_THROW(from_json(shape), ValidationError);
  EXPECT_THROW(from_json("{\"alpha\": 1,"), ParseError);
  EXPECT_THROW(load_matrix("/nonexistent/x.json"), ParseError);
}

TEST(Format, Tessarine) {
  EXPECT_EQ(format_tessarine(Tessarine::real(1)), "1+0i+0j+0k");
  EXPECT_EQ(format_tessarine({0.375, -0.0, -0.125, 2}), "0.375+0i-0.125j+2k");
  EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(Image, EncodingAndPng) {
  fs::path dir = scratch();
  RgbImage img = noise_image(17, 9, 71);
  write_png(img, (dir / "n.png").string());
  RgbImage back = read_png((dir / "n.png").string());
  EXPECT_EQ(back.width, 17);
  EXPECT_EQ(back.height, 9);
  EXPECT_EQ(back.data, img.data);
  Params p(3, 1);
  EXPECT_EQ(tessarine_to_image(image_to_tessarine(img, p)).data, img.data);
  RgbImage red(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) red.at(r, c, 0) = 255;
  TMat t = image_to_tessarine(red, p);
  EXPECT_EQ(t.B.minCoeff(), 255.0);
  EXPECT_EQ(t.C.maxCoeff(), 0.0);
  EXPECT_EQ(t.A.maxCoeff(), 0.0);
  TMat over(p, 1, 3);
  over.set(0, 0, {0, 300, -5, 2.5});
  over.set(0, 1, {0, 3.5, 0.5, 254.5});
  RgbImage q = tessarine_to_image(over);
  EXPECT_EQ(q.at(0, 0, 0), 255);
  EXPECT_EQ(q.at(0, 0, 1), 0);
  EXPECT_EQ(q.at(0, 0, 2), 2);  // half to even
  EXPECT_EQ(q.at(0, 1, 0), 4);
  EXPECT_EQ(q.at(0, 1, 1), 0);
  EXPECT_EQ(q.at(0, 1, 2), 254);
  EXPECT_THROW(read_png((dir / "missing.png").string()), ParseError);
  fs::remove_all(dir);
}

TEST(Image, Psnr) {
  RgbImage a = noise_image(8, 8, 72), b = a;
  EXPECT_TRUE(std::isinf(psnr(a, b)));
  RgbImage z(8, 8), full(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) full.at(r, c, 0) = 255;
  EXPECT_NEAR(psnr(z, full), 10 * std::log10(3.0), 1e-12);
  RgbImage c = noise_image(8, 8, 73);
  EXPECT_EQ(psnr(a, c), psnr(c, a));
  EXPECT_THROW(psnr(a, RgbImage(4, 8)), ShapeError);
}

TEST(Watermark, FullRankReproducesEmbedding) {
  RgbImage host = noise_image(12, 12, 74);
  TMat ab = wm_embed(host, host, 1e-6);
  int r = rank(ab);
  WatermarkSplit s = wm_extract(ab, r, 1e-6);
  EXPECT_LT(sub(s.host, ab).max_abs(), 1e-8);
  EXPECT_TRUE(std::isinf(psnr(host, tessarine_to_image(s.host))));
  EXPECT_THROW(wm_embed(host, RgbImage(3, 3), 0.1), ShapeError);
  EXPECT_THROW(wm_embed(host, host, 0.0), InvalidArgument);
}

TEST(Watermark, PipelineRowsMatchDirectExtraction) {
  RgbImage host = noise_image(20, 20, 75), mark = noise_image(20, 20, 76);
  auto rows = watermark_pipeline(host, mark, {0.05, 0.1}, {3, 10});
  ASSERT_EQ(rows.size(), 4u);
  WatermarkSplit s = wm_extract(wm_embed(host, mark, 0.1), 10, 0.1);
  EXPECT_EQ(rows[3].psnr_host, psnr(host, tessarine_to_image(s.host)));
  EXPECT_EQ(rows[3].psnr_mark, psnr(mark, tessarine_to_image(s.mark)));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir = scratch(); }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) { return (dir / name).string(); }
  fs::path dir;
};

TEST_F(CliTest, DetIdentityAndExitCodes) {
  save_matrix(TMat::identity(Params(14, 2), 3), path("id.json"));
  CliRun r = cli({"det", path("id.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1+0i+0j+0k\n");
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"det"}).code, 2);
  EXPECT_EQ(cli({"det", path("id.json"), "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"det", path("nope.json")}).code, 1);
  EXPECT_EQ(cli({"det", path("id.json"), "--alpha", "0"}).code, 2);
}

TEST_F(CliTest, InverseOfZeroDivisorNamesChannel) {
  Params p(-2, 3);
  auto [w1, w2] = special_units(p);
  save_matrix(scale(w1, TMat::identity(p, 2)), path("w.json"));
  CliRun r = cli({"inv", path("w.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ch_d"), std::string::npos);
}

TEST_F(CliTest, PowerOnCaseOne) {
  Params p(14, 2);
  save_matrix(abtess::test::case1_matrix(p), path("c1.json"));
  save_matrix(TMat::column(p, abtess::test::case1_seed(1)), path("y2.json"));
  CliRun r = cli({"power", path("c1.json"), path("y2.json"), "--iters", "100", "--tol", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  std::vector<double> v;
  std::stringstream cells(row);
  for (std::string c; std::getline(cells, c, ',');) v.push_back(std::stod(c));
  ASSERT_GE(v.size(), 5u);
  EXPECT_NEAR(v[0], 18.3227, 1e-3);
  EXPECT_NEAR(v[1], 1.5082, 1e-3);
  EXPECT_NEAR(v[2], 1.1252, 1e-3);
  EXPECT_NEAR(v[3], 0.4873, 1e-3);
  EXPECT_EQ(v[4], 100);
}

TEST_F(CliTest, SeedIsDeterministicAndEnvFallback) {
  save_matrix(abtess::test::case1_matrix(Params(14, 2)), path("c1.json"));
  CliRun a = cli({"power", path("c1.json"), "--seed", "5", "--iters", "7"});
  CliRun b = cli({"power", path("c1.json"), "--seed", "5", "--iters", "7"});
  EXPECT_EQ(a.out, b.out);
  ::setenv("ABTESS_SEED", "5", 1);
  CliRun c = cli({"power", path("c1.json"), "--iters", "7"});
  ::unsetenv("ABTESS_SEED");
  EXPECT_EQ(a.out, c.out);
  CliRun d = cli({"power", path("c1.json"), "--seed", "6", "--iters", "7"});
  EXPECT_NE(a.out, d.out);
}

TEST_F(CliTest, MatrixCommandsRoundTrip) {
  Rng r(77);
  Params p(-2, 3);
  TMat x = r.mat(p, 3, 3);
  save_matrix(x, path("x.json"));
  ASSERT_EQ(cli({"inv", path("x.json"), "--format", "json", "--out", path("xi.json")}).code, 0);
  TMat xi = load_matrix(path("xi.json")).plain();
  EXPECT_LT(sub(mul(x, xi), TMat::identity(p, 3)).max_abs(), 1e-10 * std::max(1.0, xi.max_abs()));
  for (const char* cmd : {"sqrt", "lu", "eig", "svd", "rank", "pinv"}) {
    EXPECT_EQ(cli({cmd, path("x.json")}).code, 0) << cmd;
    EXPECT_EQ(cli({cmd, path("x.json"), "--format", "json"}).code, 0) << cmd;
  }
  CliRun rk = cli({"rank", path("x.json")});
  EXPECT_EQ(rk.out, "3\n");
  TMat tall = r.mat(p, 5, 2);
  save_matrix(tall, path("t.json"));
  save_matrix(r.mat(p, 5, 1), path("y.json"));
  CliRun ls = cli({"lstsq", path("t.json"), path("y.json"), "--method", "pinv"});
  EXPECT_EQ(ls.code, 0);
  EXPECT_EQ(ls.out.substr(0, 13), "name,a,b,c,d\n");
}

TEST_F(CliTest, WatermarkAndPsnr) {
  write_png(noise_image(16, 16, 78), path("h.png"));
  write_png(noise_image(16, 16, 79), path("m.png"));
  ASSERT_EQ(cli({"wm-embed", path("h.png"), path("m.png"), "--mu", "0.1", "--out", path("ab.json")}).code, 0);
  CliRun ex = cli({"wm-extract", path("ab.json"), "--k", "8", "--mu", "0.1", "--out", path("rec"), "--host",
                   path("h.png"), "--mark", path("m.png")});
  ASSERT_EQ(ex.code, 0) << ex.err;
  EXPECT_TRUE(fs::exists(path("rec_host.png")));
  CliRun ps = cli({"psnr", path("h.png"), path("h.png")});
  EXPECT_EQ(ps.out, "inf\n");
  EXPECT_EQ(cli({"wm-extract", path("ab.json"), "--k", "99", "--mu", "0.1"}).code, 2);
}

TEST_F(CliTest, BenchCsvHeader) {
  CliRun r = cli({"levinson-bench", "--p", "20", "--step", "10", "--repeats", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "i,t_inverse,t_pinv,t_sequential");
  EXPECT_EQ(cli({"levinson-bench", "--p", "501"}).code, 2);
}
