#pragma once

#include <utility>
#include <vector>

#include "cpsc/types.hpp"

namespace cpsc {

/// Single-channel image, intensities nominally in [0, 255].
/// rows = height, cols = width.
using Image = Mat;

/// Overlapping patches of one image, vectorized column-major with the
/// per-patch mean removed and stored separately.
struct PatchSet {
  int patch_side = 0;
  int stride = 1;
  Mat vectors;                               // r x M, zero-mean columns
  Vec means;                                 // M
  std::vector<std::pair<int, int>> origins;  // (row, col) top-left corners

  Eigen::Index count() const { return vectors.cols(); }
  int dim() const { return patch_side * patch_side; }
};

PatchSet extract_patches(const Image& img, int patch_side, int stride = 1);

/// Closed-form whole-image update
///   X(p) = (Y(p) + mu * sum of covering patch values at p)
///          / (1 + mu * cover_count(p)).
/// `recon.vectors` holds zero-mean patch estimates; the stored means are
/// re-added before aggregation.
Image aggregate_image(const Image& noisy, const PatchSet& recon, double mu);

/// 10*log10(peak^2 / MSE); +infinity when the images are identical.
double psnr(const Image& a, const Image& b, double peak = 255.0);

}  // namespace cpsc
