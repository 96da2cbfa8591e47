#include "cpsc/image.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cpsc {

PatchSet extract_patches(const Image& img, int patch_side, int stride) {
  if (patch_side < 1 || patch_side > img.rows() || patch_side > img.cols())
    throw std::invalid_argument("extract_patches: patch larger than image");
  if (stride < 1)
    throw std::invalid_argument("extract_patches: stride must be >= 1");

  PatchSet ps;
  ps.patch_side = patch_side;
  ps.stride = stride;
  for (int i = 0; i + patch_side <= img.rows(); i += stride)
    for (int j = 0; j + patch_side <= img.cols(); j += stride)
      ps.origins.emplace_back(i, j);

  const int r = patch_side * patch_side;
  const Eigen::Index m = static_cast<Eigen::Index>(ps.origins.size());
  ps.vectors.resize(r, m);
  ps.means.resize(m);
  Mat patch(patch_side, patch_side);
  for (Eigen::Index c = 0; c < m; ++c) {
    const auto [i, j] = ps.origins[static_cast<std::size_t>(c)];
    patch = img.block(i, j, patch_side, patch_side);
    const Eigen::Map<const Vec> v(patch.data(), r);
    const double mean = v.mean();
    ps.means(c) = mean;
    ps.vectors.col(c) = v.array() - mean;
  }
  return ps;
}

Image aggregate_image(const Image& noisy, const PatchSet& recon, double mu) {
  if (!(mu >= 0.0))
    throw std::invalid_argument("aggregate_image: mu must be nonnegative");
  const int side = recon.patch_side;
  if (side < 1 || recon.vectors.rows() != side * side ||
      recon.means.size() != recon.vectors.cols() ||
      recon.origins.size() != static_cast<std::size_t>(recon.vectors.cols()))
    throw std::invalid_argument("aggregate_image: inconsistent patch set");

  Mat weighted_sum = noisy;                                 // Y + mu * sums
  Mat cover = Mat::Zero(noisy.rows(), noisy.cols());
  for (Eigen::Index c = 0; c < recon.count(); ++c) {
    const auto [i, j] = recon.origins[static_cast<std::size_t>(c)];
    if (i < 0 || j < 0 || i + side > noisy.rows() || j + side > noisy.cols())
      throw std::invalid_argument("aggregate_image: patch origin out of bounds");
    const Eigen::Map<const Mat> patch(recon.vectors.col(c).data(), side, side);
    weighted_sum.block(i, j, side, side) +=
        mu * (patch.array() + recon.means(c)).matrix();
    cover.block(i, j, side, side).array() += 1.0;
  }
  return weighted_sum.array() / (1.0 + mu * cover.array());
}

double psnr(const Image& a, const Image& b, double peak) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("psnr: image dimensions differ");
  const double mse =
      (a - b).squaredNorm() / static_cast<double>(a.rows() * a.cols());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

}  // namespace cpsc
