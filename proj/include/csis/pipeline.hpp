#ifndef CSIS_PIPELINE_HPP
#define CSIS_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csis/des.hpp"
#include "csis/image.hpp"
#include "csis/lasso.hpp"
#include "csis/metrics.hpp"
#include "csis/sensing.hpp"
#include "csis/stegocodec.hpp"

namespace csis {

/// Stego-data container: header + per-channel, per-block measurements
/// [y_u; y_v] (or [y_u; z_v] after embedding).
///
/// Wire format, little-endian:
///   "CSIS" | u16 version=1 | u32 width | u32 height | u16 channels |
///   u16 B | u16 p1 | u16 |m| | then channels*blocks records of
///   p1 f32 (y_u) followed by (|m|-p1) i32 (y_v).
struct StegoContainer {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint16_t channels = 1;
  std::uint16_t block_size = 8;
  std::uint16_t p1 = 12;
  std::uint16_t m_size = 37;
  std::vector<BlockMeasurements> blocks;  // channel-major, raster block order

  std::size_t blocks_per_channel() const {
    return static_cast<std::size_t>(width / block_size) * (height / block_size);
  }
};

std::vector<std::uint8_t> serialize_container(const StegoContainer& c);
StegoContainer parse_container(std::span<const std::uint8_t> bytes);

/// Measures a cover without embedding anything: split channels, split blocks,
/// sparsify, measure. The result of embed_file differs from this only in the
/// permissible y_v entries that carry the encrypted payload frame.
StegoContainer measure_cover(const Image& cover, const StegoKey& skey);

/// Full embedding pipeline. The payload (any bit length, including zero) is
/// framed and DES-encrypted first; the encrypted frame must fit the capacity.
StegoContainer embed_file(const Image& cover, const BitString& payload, const StegoKey& skey,
                          const DesKey& dkey);

/// Recovers the exact payload from a container produced by embed_file with
/// the same DES key. Throws FramingError on a wrong key or corrupted data.
BitString extract_file(const StegoContainer& container, const DesKey& dkey);

struct ConstructOptions {
  double lambda = 1.0;
  AdmmSettings admm;
};

/// Builds the stego-image: y_u carries the low-frequency coefficients
/// directly; the v-part is recovered per block by ADMM-LASSO against Phi_v.
Image construct_stego_image(const StegoContainer& container, const StegoKey& skey,
                            const ConstructOptions& opts = {});

/// Diagnostics from re-measuring a (lossy) stego-image with a key.
struct ImageExtraction {
  BitString raw_stream;              // dibits of all permissible re-measurements
  bool framing_ok = false;
  BitString payload;                 // only meaningful when framing_ok
  std::string framing_message;       // diagnostic when !framing_ok
  std::optional<double> payload_ber; // vs reference, when comparable
  std::optional<double> stream_ber;  // raw stream vs reference ciphertext prefix
};

/// Re-measures the image with skey, extracts the dibit stream and attempts
/// decryption. Framing failure is reported, not thrown. When a reference
/// payload is supplied, BER diagnostics are filled in: payload BER when the
/// frame parsed to the same length, and raw-stream BER against the reference
/// ciphertext over the common prefix otherwise.
ImageExtraction extract_from_image(const Image& stego, const StegoKey& skey, const DesKey& dkey,
                                   const BitString* reference_payload = nullptr);

struct EvaluateOptions {
  double payload_fraction = 0.9;   // of measured capacity
  std::uint64_t payload_seed = 1;
  ConstructOptions construct;
  int wrong_key_trials = 0;        // extra image-domain resistance experiment
};

struct WrongKeyStats {
  int trials = 0;
  int resistant = 0;      // framing failure, length mismatch, or BER >= 20%
  double mean_stream_ber = 0.0;
};

struct EvaluationRun {
  StegoKey key;
  double lambda = 1.0;
  double rho = 1.0;
  std::uint64_t payload_seed = 0;
  std::size_t capacity_bits = 0;
  std::size_t payload_bits = 0;
  QualityReport quality;
  double ber_percent = 0.0;        // container-path BER, exact
  AddSubProfile add_sub;
  double correct_key_image_ber = -1.0;  // raw-stream diagnostic, -1 when n/a
  WrongKeyStats wrong_key;
  double embed_ms = 0.0;
  double construct_ms = 0.0;
  double extract_ms = 0.0;
};

/// Runs embed -> construct -> extract on a seeded random payload and collects
/// every metric of the run.
EvaluationRun evaluate(const Image& cover, const StegoKey& skey, const DesKey& dkey,
                       const EvaluateOptions& opts = {});

/// Seeded random payload bits (SplitMix64-driven).
BitString random_payload(std::size_t bit_count, std::uint64_t seed);

/// Image-domain wrong-key experiment: re-extracts from the stego-image with
/// `trials` perturbed-seed keys and counts the resistant outcomes.
WrongKeyStats wrong_key_resistance(const Image& stego, const StegoKey& skey, const DesKey& dkey,
                                   const BitString& reference_payload, int trials);

/// Line-oriented key=value rendering of an evaluation run.
std::string render_report(const EvaluationRun& run);
/// Same content as a JSON object (metric name -> number).
std::string render_report_json(const EvaluationRun& run);

}  // namespace csis

#endif  // CSIS_PIPELINE_HPP
