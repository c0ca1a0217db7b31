#include "csis/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "csis/errors.hpp"

namespace csis {
namespace {

void require_same_shape(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ConfigError(std::string(who) + ": dimension mismatch");
}

constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;

// Valid-region correlation with the separable normalized Gaussian window.
Eigen::MatrixXd gaussian_filter_valid(const Eigen::MatrixXd& x) {
  static const Eigen::VectorXd g = [] {
    Eigen::VectorXd v(kSsimWindow);
    const int half = kSsimWindow / 2;
    for (int i = 0; i < kSsimWindow; ++i) {
      const double d = i - half;
      v[i] = std::exp(-d * d / (2.0 * kSsimSigma * kSsimSigma));
    }
    return Eigen::VectorXd(v / v.sum());
  }();
  const Eigen::Index rows = x.rows() - kSsimWindow + 1;
  const Eigen::Index cols = x.cols() - kSsimWindow + 1;
  Eigen::MatrixXd h(x.rows(), cols);  // horizontal pass
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < cols; ++c) h(r, c) = x.row(r).segment(c, kSsimWindow).dot(g);
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) out(r, c) = h.col(c).segment(r, kSsimWindow).dot(g);
  return out;
}

}  // namespace

double mse(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  require_same_shape(a, b, "mse");
  return (a - b).squaredNorm() / static_cast<double>(a.size());
}

double mse(const Image& a, const Image& b) { return mse(to_matrix(a), to_matrix(b)); }

double psnr(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

double psnr(const Image& a, const Image& b) { return psnr(to_matrix(a), to_matrix(b)); }

double mssim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  require_same_shape(a, b, "mssim");
  if (a.rows() < kSsimWindow || a.cols() < kSsimWindow)
    throw ConfigError("mssim: image smaller than the 11x11 window");
  const double c1 = (0.01 * 255) * (0.01 * 255);
  const double c2 = (0.03 * 255) * (0.03 * 255);
  const Eigen::MatrixXd mu_a = gaussian_filter_valid(a);
  const Eigen::MatrixXd mu_b = gaussian_filter_valid(b);
  const Eigen::MatrixXd var_a =
      gaussian_filter_valid(a.cwiseProduct(a)) - mu_a.cwiseProduct(mu_a);
  const Eigen::MatrixXd var_b =
      gaussian_filter_valid(b.cwiseProduct(b)) - mu_b.cwiseProduct(mu_b);
  const Eigen::MatrixXd cov = gaussian_filter_valid(a.cwiseProduct(b)) - mu_a.cwiseProduct(mu_b);

  double sum = 0.0;
  for (Eigen::Index c = 0; c < mu_a.cols(); ++c)
    for (Eigen::Index r = 0; r < mu_a.rows(); ++r) {
      const double num = (2.0 * mu_a(r, c) * mu_b(r, c) + c1) * (2.0 * cov(r, c) + c2);
      const double den = (mu_a(r, c) * mu_a(r, c) + mu_b(r, c) * mu_b(r, c) + c1) *
                         (var_a(r, c) + var_b(r, c) + c2);
      sum += num / den;
    }
  return sum / static_cast<double>(mu_a.size());
}

double mssim(const Image& a, const Image& b) { return mssim(to_matrix(a), to_matrix(b)); }

double ncc(const Eigen::MatrixXd& cover, const Eigen::MatrixXd& stego) {
  require_same_shape(cover, stego, "ncc");
  const double energy = cover.squaredNorm();
  if (energy == 0.0) throw ConfigError("ncc: cover has zero energy");
  return cover.cwiseProduct(stego).sum() / energy;
}

double ncc(const Image& cover, const Image& stego) {
  return ncc(to_matrix(cover), to_matrix(stego));
}

double entropy(std::span<const std::uint8_t> values) {
  std::array<std::size_t, 256> counts{};
  for (std::uint8_t v : values) ++counts[v];
  const double n = static_cast<double>(values.size());
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double entropy(const Image& img) {
  return entropy(std::span<const std::uint8_t>(img.pixels.data(), img.pixels.size()));
}

double sampling_rate(int m_size, int block_size) {
  if (block_size < 1) throw ConfigError("sampling_rate: block size must be >= 1");
  return static_cast<double>(m_size) / static_cast<double>(block_size * block_size);
}

Histogram histogram(std::span<const int> values, int bins) {
  if (bins < 1) throw ConfigError("histogram: need at least one bin");
  Histogram h;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  if (values.empty()) return h;
  long long lo = values[0], hi = values[0];
  for (int v : values) {
    lo = std::min<long long>(lo, v);
    hi = std::max<long long>(hi, v);
  }
  h.lo = lo;
  h.bin_width = (hi - lo) / bins + 1;
  for (int v : values) ++h.counts[static_cast<std::size_t>((v - lo) / h.bin_width)];
  return h;
}

QualityReport quality_report(const Image& cover, const Image& stego) {
  if (cover.width != stego.width || cover.height != stego.height ||
      cover.channels != stego.channels)
    throw ConfigError("quality_report: image shapes differ");
  const std::vector<Image> cp = split_channels(cover);
  const std::vector<Image> sp = split_channels(stego);
  QualityReport q;
  double psnr_sum = 0.0, mssim_sum = 0.0, ncc_sum = 0.0, mse_sum = 0.0;
  for (std::size_t ch = 0; ch < cp.size(); ++ch) {
    mse_sum += mse(cp[ch], sp[ch]);
    psnr_sum += psnr(cp[ch], sp[ch]);
    mssim_sum += mssim(cp[ch], sp[ch]);
    const double n = ncc(cp[ch], sp[ch]);
    q.ncc_per_channel.push_back(n);
    ncc_sum += n;
  }
  const double nch = static_cast<double>(cp.size());
  q.mse = mse_sum / nch;
  q.psnr_db = psnr_sum / nch;
  q.mssim = mssim_sum / nch;
  q.ncc = ncc_sum / nch;
  q.entropy_cover = entropy(cover);
  q.entropy_stego = entropy(stego);
  return q;
}

}  // namespace csis
