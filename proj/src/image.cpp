#include "csis/image.hpp"

#include <cmath>
#include <string>

#include "csis/errors.hpp"

namespace csis {
namespace {

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

[[noreturn]] void parse_fail(std::size_t offset, const std::string& what) {
  throw FormatError("PNM parse error at byte " + std::to_string(offset) + ": " + what);
}

// Skips whitespace and '#' comments (comment runs to end of line).
void skip_separators(std::span<const std::uint8_t> b, std::size_t& pos) {
  while (pos < b.size()) {
    if (is_pnm_space(b[pos])) {
      ++pos;
    } else if (b[pos] == '#') {
      while (pos < b.size() && b[pos] != '\n') ++pos;
    } else {
      return;
    }
  }
}

unsigned parse_uint(std::span<const std::uint8_t> b, std::size_t& pos, const char* field) {
  skip_separators(b, pos);
  if (pos >= b.size() || b[pos] < '0' || b[pos] > '9')
    parse_fail(pos, std::string("expected ") + field);
  unsigned long v = 0;
  while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
    v = v * 10 + (b[pos] - '0');
    if (v > 1'000'000'000UL) parse_fail(pos, std::string(field) + " out of range");
    ++pos;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

Image load_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
    parse_fail(0, "magic must be P5 or P6");
  Image img;
  img.channels = bytes[1] == '5' ? 1 : 3;
  std::size_t pos = 2;
  img.width = static_cast<int>(parse_uint(bytes, pos, "width"));
  img.height = static_cast<int>(parse_uint(bytes, pos, "height"));
  skip_separators(bytes, pos);
  const std::size_t maxval_pos = pos;
  unsigned maxval = parse_uint(bytes, pos, "maxval");
  if (maxval != 255) parse_fail(maxval_pos, "unsupported maxval " + std::to_string(maxval) + " (only 255)");
  if (img.width <= 0 || img.height <= 0) parse_fail(2, "zero image dimension");
  if (pos >= bytes.size() || !is_pnm_space(bytes[pos]))
    parse_fail(pos, "expected single whitespace before raster");
  ++pos;  // exactly one separator byte, then raw raster
  std::size_t need = img.pixel_count() * img.channels;
  if (bytes.size() - pos < need)
    parse_fail(bytes.size(),
               "truncated raster: need " + std::to_string(need) + " bytes, have " +
                   std::to_string(bytes.size() - pos));
  img.pixels.assign(bytes.begin() + pos, bytes.begin() + pos + need);
  return img;
}

std::vector<std::uint8_t> save_pnm(const Image& img) {
  std::string header = (img.channels == 3 ? "P6" : "P5");
  header += "\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

std::vector<Eigen::MatrixXd> split_blocks(const Image& plane, int block_size) {
  if (plane.channels != 1) throw ConfigError("split_blocks: expected a single-channel plane");
  if (block_size < 1 || plane.width % block_size != 0 || plane.height % block_size != 0)
    throw ConfigError("split_blocks: block size " + std::to_string(block_size) +
                      " does not divide " + std::to_string(plane.width) + "x" +
                      std::to_string(plane.height));
  const int bx = plane.width / block_size;
  const int by = plane.height / block_size;
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(static_cast<std::size_t>(bx) * by);
  for (int r = 0; r < by; ++r)
    for (int c = 0; c < bx; ++c) {
      Eigen::MatrixXd b(block_size, block_size);
      for (int i = 0; i < block_size; ++i)
        for (int j = 0; j < block_size; ++j)
          b(i, j) = plane.at(r * block_size + i, c * block_size + j);
      blocks.push_back(std::move(b));
    }
  return blocks;
}

std::uint8_t quantize_pixel(double v) {
  double r = std::round(v);  // round halves away from zero
  if (r < 0.0) r = 0.0;
  if (r > 255.0) r = 255.0;
  return static_cast<std::uint8_t>(r);
}

Image merge_blocks(const std::vector<Eigen::MatrixXd>& blocks, int width, int height) {
  if (blocks.empty()) throw ConfigError("merge_blocks: no blocks");
  const int block_size = static_cast<int>(blocks.front().rows());
  if (blocks.front().cols() != block_size) throw ConfigError("merge_blocks: blocks must be square");
  if (width % block_size != 0 || height % block_size != 0 ||
      blocks.size() != static_cast<std::size_t>(width / block_size) * (height / block_size))
    throw ConfigError("merge_blocks: block count does not match " + std::to_string(width) + "x" +
                      std::to_string(height));
  for (const Eigen::MatrixXd& b : blocks)
    if (b.rows() != block_size || b.cols() != block_size)
      throw ConfigError("merge_blocks: blocks must share one square size");
  Image plane;
  plane.width = width;
  plane.height = height;
  plane.channels = 1;
  plane.pixels.resize(plane.pixel_count());
  const int bx = width / block_size;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int r0 = static_cast<int>(k) / bx * block_size;
    const int c0 = static_cast<int>(k) % bx * block_size;
    for (int i = 0; i < block_size; ++i)
      for (int j = 0; j < block_size; ++j)
        plane.pixels[static_cast<std::size_t>(r0 + i) * width + c0 + j] =
            quantize_pixel(blocks[k](i, j));
  }
  return plane;
}

std::vector<Image> split_channels(const Image& img) {
  std::vector<Image> planes(img.channels);
  for (int ch = 0; ch < img.channels; ++ch) {
    planes[ch].width = img.width;
    planes[ch].height = img.height;
    planes[ch].channels = 1;
    planes[ch].pixels.resize(img.pixel_count());
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
      planes[ch].pixels[i] = img.pixels[i * img.channels + ch];
  }
  return planes;
}

Image merge_channels(const std::vector<Image>& planes) {
  if (planes.empty()) throw ConfigError("merge_channels: no planes");
  Image img;
  img.width = planes[0].width;
  img.height = planes[0].height;
  img.channels = static_cast<int>(planes.size());
  for (const Image& p : planes)
    if (p.channels != 1 || p.width != img.width || p.height != img.height)
      throw ConfigError("merge_channels: planes must be single-channel and same size");
  img.pixels.resize(img.pixel_count() * img.channels);
  for (int ch = 0; ch < img.channels; ++ch)
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
      img.pixels[i * img.channels + ch] = planes[ch].pixels[i];
  return img;
}

Eigen::MatrixXd to_matrix(const Image& plane, int channel) {
  Eigen::MatrixXd m(plane.height, plane.width);
  for (int r = 0; r < plane.height; ++r)
    for (int c = 0; c < plane.width; ++c) m(r, c) = plane.at(r, c, channel);
  return m;
}

}  // namespace csis
