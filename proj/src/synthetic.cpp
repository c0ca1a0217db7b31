#include "csis/synthetic.hpp"

#include <cmath>

#include "csis/errors.hpp"
#include "csis/sensing.hpp"

namespace csis {
namespace {

constexpr double kPi = 3.14159265358979323846;

double uniform01(SplitMix64& rng) {
  return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

double normal(SplitMix64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

Eigen::MatrixXd white_noise(int h, int w, SplitMix64& rng) {
  Eigen::MatrixXd m(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) m(r, c) = normal(rng);
  return m;
}

// 3x3 box smoothing with clamped borders.
Eigen::MatrixXd box_smooth(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      double s = 0.0;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          const Eigen::Index rr = std::clamp<Eigen::Index>(r + dr, 0, m.rows() - 1);
          const Eigen::Index cc = std::clamp<Eigen::Index>(c + dc, 0, m.cols() - 1);
          s += m(rr, cc);
        }
      out(r, c) = s / 9.0;
    }
  return out;
}

void rescale(Eigen::MatrixXd& m, double lo, double hi) {
  const double mn = m.minCoeff(), mx = m.maxCoeff();
  if (mx > mn) m = (m.array() - mn) / (mx - mn) * (hi - lo) + lo;
  else m.setConstant((lo + hi) / 2.0);
}

Eigen::MatrixXd terrain_plane(int h, int w, SplitMix64& rng) {
  Eigen::MatrixXd base = Eigen::MatrixXd::Zero(h, w);
  for (int k = 0; k < 8; ++k) {
    const double fx = std::floor(uniform01(rng) * 5.0);
    const double fy = std::floor(uniform01(rng) * 5.0);
    const double phase = uniform01(rng) * 2.0 * kPi;
    const double amp = 1.0 / (1.0 + k);
    if (fx == 0.0 && fy == 0.0) continue;
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c)
        base(r, c) += amp * std::cos(2.0 * kPi * (fx * c / w + fy * r / h) + phase);
  }
  rescale(base, 25.0, 230.0);
  return base + 2.8 * box_smooth(3.0 * white_noise(h, w, rng)) + 1.5 * white_noise(h, w, rng);
}

Eigen::MatrixXd plasma_plane(int h, int w, SplitMix64& rng) {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(h, w);
  for (int scale = 64; scale >= 4; scale /= 2) {
    const int gh = h / scale + 2, gw = w / scale + 2;
    Eigen::MatrixXd lattice(gh, gw);
    for (int r = 0; r < gh; ++r)
      for (int c = 0; c < gw; ++c) lattice(r, c) = 2.0 * uniform01(rng) - 1.0;
    const double amp = scale;
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < w; ++c) {
        const double fy = static_cast<double>(r) / scale;
        const double fx = static_cast<double>(c) / scale;
        const int iy = static_cast<int>(fy), ix = static_cast<int>(fx);
        const double ty = fy - iy, tx = fx - ix;
        const double v00 = lattice(iy, ix), v01 = lattice(iy, ix + 1);
        const double v10 = lattice(iy + 1, ix), v11 = lattice(iy + 1, ix + 1);
        sum(r, c) += amp * ((1 - ty) * ((1 - tx) * v00 + tx * v01) +
                            ty * ((1 - tx) * v10 + tx * v11));
      }
  }
  rescale(sum, 20.0, 235.0);
  return sum + 1.5 * white_noise(h, w, rng);
}

Eigen::MatrixXd rings_plane(int h, int w, SplitMix64& rng) {
  const double cx = w * (0.35 + 0.3 * uniform01(rng));
  const double cy = h * (0.35 + 0.3 * uniform01(rng));
  const double wx = 0.6 + 0.4 * uniform01(rng);
  const double wy = 0.5 + 0.4 * uniform01(rng);
  Eigen::MatrixXd m(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const double dr = std::hypot(c - cx, r - cy);
      const double slow = 55.0 * std::sin(2.0 * kPi * dr / 96.0) +
                          35.0 * std::sin(2.0 * kPi * (c * 0.9 + r * 0.4) / 160.0);
      const double weave = 9.0 * std::sin(wx * c) * std::sin(wy * r);
      m(r, c) = 127.0 + slow * 0.9 + weave;
    }
  return m + 1.6 * white_noise(h, w, rng);
}

Image quantize_plane(const Eigen::MatrixXd& m) {
  Image img;
  img.width = static_cast<int>(m.cols());
  img.height = static_cast<int>(m.rows());
  img.channels = 1;
  img.pixels.resize(img.pixel_count());
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c)
      img.pixels[static_cast<std::size_t>(r) * img.width + c] = quantize_pixel(m(r, c));
  return img;
}

}  // namespace

std::vector<std::string> synthetic_recipes() { return {"terrain", "plasma", "rings"}; }

Image synthetic_cover(const std::string& recipe, int width, int height, std::uint64_t seed,
                      int channels) {
  if (width < 1 || height < 1 || (channels != 1 && channels != 3))
    throw ConfigError("synthetic_cover: bad dimensions or channel count");
  std::vector<Image> planes;
  for (int ch = 0; ch < channels; ++ch) {
    SplitMix64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(ch) * 7919ULL);
    Eigen::MatrixXd plane;
    if (recipe == "terrain") plane = terrain_plane(height, width, rng);
    else if (recipe == "plasma") plane = plasma_plane(height, width, rng);
    else if (recipe == "rings") plane = rings_plane(height, width, rng);
    else throw ConfigError("synthetic_cover: unknown recipe '" + recipe + "'");
    planes.push_back(quantize_plane(plane));
  }
  return merge_channels(planes);
}

}  // namespace csis
