#include "abtess/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "abtess/spectral.hpp"

namespace abtess {

RgbImage::RgbImage(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3, 0) {
  if (w < 0 || h < 0) throw InvalidArgument("image size must be nonnegative");
}

RgbImage read_png(const std::string& path) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&img, path.c_str()))
    throw ParseError(path + ": " + img.message);
  if (img.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&img);
    throw ValidationError(path + ": unsupported pixel format (16-bit)");
  }
  // Read with alpha so that nothing is composited, then drop it.
  img.format = PNG_FORMAT_RGBA;
  std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, rgba.data(), 0, nullptr))
    throw ParseError(path + ": " + img.message);
  RgbImage out(static_cast<int>(img.width), static_cast<int>(img.height));
  for (size_t px = 0; px < static_cast<size_t>(out.width) * out.height; ++px)
    for (int c = 0; c < 3; ++c) out.data[px * 3 + c] = rgba[px * 4 + c];
  return out;
}

void write_png(const RgbImage& src, const std::string& path) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(src.width);
  img.height = static_cast<png_uint_32>(src.height);
  img.format = PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&img, path.c_str(), 0, src.data.data(), 0, nullptr))
    throw ValidationError(path + ": " + img.message);
}

TMat image_to_tessarine(const RgbImage& img, const Params& p) {
  TMat x(p, img.height, img.width);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c) {
      x.B(r, c) = img.at(r, c, 0);
      x.C(r, c) = img.at(r, c, 1);
      x.D(r, c) = img.at(r, c, 2);
    }
  return x;
}

namespace {

std::uint8_t quantize(double v) {
  if (!(v > 0.0)) return 0;  // also catches NaN
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::nearbyint(v));
}

}  // namespace

RgbImage tessarine_to_image(const TMat& x) {
  RgbImage out(static_cast<int>(x.cols()), static_cast<int>(x.rows()));
  for (int r = 0; r < out.height; ++r)
    for (int c = 0; c < out.width; ++c) {
      out.at(r, c, 0) = quantize(x.B(r, c));
      out.at(r, c, 1) = quantize(x.C(r, c));
      out.at(r, c, 2) = quantize(x.D(r, c));
    }
  return out;
}

double psnr(const RgbImage& a, const RgbImage& b) {
  if (a.width != b.width || a.height != b.height) throw ShapeError("psnr: image sizes differ");
  if (a.data.empty()) throw InvalidArgument("psnr: empty image");
  double sse = 0;
  for (size_t n = 0; n < a.data.size(); ++n) {
    double d = static_cast<double>(a.data[n]) - static_cast<double>(b.data[n]);
    sse += d * d;
  }
  if (sse == 0.0) return std::numeric_limits<double>::infinity();
  double mse = sse / static_cast<double>(a.data.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

Params watermark_params() { return Params(3.0, 1.0); }

TMat wm_embed(const RgbImage& host, const RgbImage& mark, double mu, const Params& p) {
  if (host.width != mark.width || host.height != mark.height) throw ShapeError("watermark: image sizes differ");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("watermark: mu must be positive");
  return add(image_to_tessarine(host, p), scale(mu, image_to_tessarine(mark, p)));
}

namespace {

WatermarkSplit split_from(const TMat& embedded, TMat host, double mu) {
  TMat mark = scale(1.0 / mu, sub(embedded, host));
  return {std::move(host), std::move(mark)};
}

}  // namespace

WatermarkSplit wm_extract(const TMat& embedded, int k, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("watermark: mu must be positive");
  return split_from(embedded, rank_k_approx(embedded, k), mu);
}

std::vector<WatermarkRow> watermark_pipeline(const RgbImage& host, const RgbImage& mark,
                                             const std::vector<double>& mus, const std::vector<int>& ks,
                                             const Params& p) {
  std::vector<WatermarkRow> out;
  for (double mu : mus) {
    TMat ab = wm_embed(host, mark, mu, p);
    SvdDecomp s = svd(ab);
    for (int k : ks) {
      WatermarkSplit parts = split_from(ab, svd_truncate(s, k), mu);
      out.push_back({mu, k, psnr(host, tessarine_to_image(parts.host)), psnr(mark, tessarine_to_image(parts.mark))});
    }
  }
  return out;
}

}  // namespace abtess
