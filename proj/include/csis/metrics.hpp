#ifndef CSIS_METRICS_HPP
#define CSIS_METRICS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "csis/image.hpp"

namespace csis {

double mse(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double mse(const Image& a, const Image& b);

/// 10*log10(255^2 / MSE); +infinity when the planes are identical.
double psnr(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double psnr(const Image& a, const Image& b);

/// Mean SSIM over sliding 11x11 Gaussian windows (sigma 1.5), with
/// C1 = (0.01*255)^2 and C2 = (0.03*255)^2. Images must be at least 11x11.
double mssim(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
double mssim(const Image& a, const Image& b);

/// sum(I .* SI) / sum(I.^2); normalized by the cover energy, so asymmetric.
double ncc(const Eigen::MatrixXd& cover, const Eigen::MatrixXd& stego);
double ncc(const Image& cover, const Image& stego);

/// Shannon entropy of the 256-bin intensity histogram, in bits per pixel.
/// Color images pool all channels into one histogram.
double entropy(std::span<const std::uint8_t> values);
double entropy(const Image& img);

/// |m| / B^2, measurements per pixel.
double sampling_rate(int m_size, int block_size);

struct Histogram {
  long long lo = 0;        // value at the left edge of bin 0
  long long bin_width = 1;
  std::vector<std::size_t> counts;
};

/// Equal-width integer bins covering [min, max] of the data; every input
/// value lands in exactly one bin. Empty input gives all-zero counts.
Histogram histogram(std::span<const int> values, int bins);

struct QualityReport {
  double mse = 0.0;
  double psnr_db = 0.0;
  double mssim = 0.0;
  double ncc = 0.0;
  std::vector<double> ncc_per_channel;
  double entropy_cover = 0.0;
  double entropy_stego = 0.0;
  std::size_t capacity_bits = 0;
  double sampling_rate = 0.0;
};

/// PSNR/MSSIM averaged over channels, NCC per channel plus average.
QualityReport quality_report(const Image& cover, const Image& stego);

}  // namespace csis

#endif  // CSIS_METRICS_HPP
