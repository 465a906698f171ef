#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abtess/tmat.hpp"

namespace abtess {

// 8-bit RGB, row-major, interleaved.
struct RgbImage {
  int width = 0, height = 0;
  std::vector<std::uint8_t> data;

  RgbImage() = default;
  RgbImage(int w, int h);
  std::uint8_t& at(int row, int col, int ch) { return data[(static_cast<size_t>(row) * width + col) * 3 + ch]; }
  std::uint8_t at(int row, int col, int ch) const { return data[(static_cast<size_t>(row) * width + col) * 3 + ch]; }
};

// Any 8-bit PNG is expanded to RGB; an alpha channel is dropped. 16-bit input is rejected.
RgbImage read_png(const std::string& path);
void write_png(const RgbImage& img, const std::string& path);

// R, G, B go to the i, j, k parts; the real part is zero.
TMat image_to_tessarine(const RgbImage& img, const Params& p);
// Inverse of image_to_tessarine: the real part is discarded, values are clamped to [0, 255]
// and rounded half to even.
RgbImage tessarine_to_image(const TMat& x);

// 10 log10(255^2 / MSE) over all channels; +inf when the images are equal.
double psnr(const RgbImage& a, const RgbImage& b);

struct WatermarkRow {
  double mu = 0;
  int k = 0;
  double psnr_host = 0;  // PSNR(A, A_hat)
  double psnr_mark = 0;  // PSNR(B, B_hat)
};

Params watermark_params();  // alpha = 3, beta = 1

// A_B = A + mu B on the encoded images.
TMat wm_embed(const RgbImage& host, const RgbImage& mark, double mu, const Params& p = watermark_params());
// A_hat = rank-k approximation of A_B; B_hat = (A_B - A_hat) / mu.
struct WatermarkSplit {
  TMat host, mark;
};
WatermarkSplit wm_extract(const TMat& embedded, int k, double mu);

// One SVD per mu, then a truncation per k; rows ordered by mu then k.
std::vector<WatermarkRow> watermark_pipeline(const RgbImage& host, const RgbImage& mark,
                                             const std::vector<double>& mus, const std::vector<int>& ks,
                                             const Params& p = watermark_params());

}  // namespace abtess
