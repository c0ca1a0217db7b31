#ifndef CSIS_IMAGE_HPP
#define CSIS_IMAGE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

namespace csis {

/// 8-bit raster, row-major, channels interleaved (1 = grayscale, 3 = RGB).
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> pixels;

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
  std::uint8_t at(int row, int col, int ch = 0) const {
    return pixels[(static_cast<std::size_t>(row) * width + col) * channels + ch];
  }

  friend bool operator==(const Image& a, const Image& b) = default;
};

/// Parses binary PNM (P5 grayscale / P6 color, maxval 255). Header comments
/// are tolerated; errors report the offending byte offset.
Image load_pnm(std::span<const std::uint8_t> bytes);

/// Emits P5/P6 with single-whitespace delimiters and no comments;
/// load_pnm(save_pnm(img)) == img byte-for-byte.
std::vector<std::uint8_t> save_pnm(const Image& img);

/// Cuts a single-channel plane into B x B blocks in raster order
/// (left-to-right, top-to-bottom). B must divide both dimensions.
std::vector<Eigen::MatrixXd> split_blocks(const Image& plane, int block_size);

/// Inverse of split_blocks: rounds half away from zero, then clamps to [0,255].
Image merge_blocks(const std::vector<Eigen::MatrixXd>& blocks, int width, int height);

std::vector<Image> split_channels(const Image& img);
Image merge_channels(const std::vector<Image>& planes);

/// Plane pixels as a height x width double matrix.
Eigen::MatrixXd to_matrix(const Image& plane, int channel = 0);

std::uint8_t quantize_pixel(double v);

}  // namespace csis

#endif  // CSIS_IMAGE_HPP
