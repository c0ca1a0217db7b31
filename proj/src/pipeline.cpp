#include "csis/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "csis/errors.hpp"

namespace csis {
namespace {

constexpr char kMagic[4] = {'C', 'S', 'I', 'S'};
constexpr std::uint16_t kVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 2 + 4 + 4 + 2 + 2 + 2 + 2;

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back(v >> 8);
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t pos) {
  return static_cast<std::uint16_t>(b[pos] | (b[pos + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[pos + i];
  return v;
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

void check_container_key(const StegoContainer& c, const StegoKey& k, const char* who) {
  if (c.block_size != k.block_size || c.p1 != k.p1 || c.m_size != k.m_size)
    throw ConfigError(std::string(who) + ": container parameters do not match the key");
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(8);
  os << v;
  return os.str();
}

}  // namespace

std::vector<std::uint8_t> serialize_container(const StegoContainer& c) {
  std::vector<std::uint8_t> out;
  const std::size_t records = c.blocks.size();
  if (c.block_size == 0 || records != c.blocks_per_channel() * c.channels)
    throw ConfigError("serialize_container: block count does not match header");
  out.reserve(kHeaderSize + records * 4 * c.m_size);
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u16(out, kVersion);
  put_u32(out, c.width);
  put_u32(out, c.height);
  put_u16(out, c.channels);
  put_u16(out, c.block_size);
  put_u16(out, c.p1);
  put_u16(out, c.m_size);
  const int v_len = c.m_size - c.p1;
  for (const BlockMeasurements& m : c.blocks) {
    if (m.y_u.size() != c.p1 || m.y_v.size() != v_len)
      throw ConfigError("serialize_container: block measurement sizes do not match header");
    for (Eigen::Index i = 0; i < m.y_u.size(); ++i) {
      const float f = static_cast<float>(m.y_u[i]);
      std::uint32_t bits;
      std::memcpy(&bits, &f, 4);
      put_u32(out, bits);
    }
    for (Eigen::Index i = 0; i < m.y_v.size(); ++i)
      put_u32(out, static_cast<std::uint32_t>(m.y_v[i]));
  }
  return out;
}

StegoContainer parse_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("container: truncated header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw FormatError("container: bad magic");
  if (get_u16(bytes, 4) != kVersion) throw FormatError("container: unsupported version");
  StegoContainer c;
  c.width = get_u32(bytes, 6);
  c.height = get_u32(bytes, 10);
  c.channels = get_u16(bytes, 14);
  c.block_size = get_u16(bytes, 16);
  c.p1 = get_u16(bytes, 18);
  c.m_size = get_u16(bytes, 20);
  if (c.block_size == 0 || c.channels == 0 || c.width % c.block_size != 0 ||
      c.height % c.block_size != 0 || !(c.p1 >= 1 && c.p1 < c.m_size) ||
      static_cast<long long>(c.m_size) >=
          static_cast<long long>(c.block_size) * c.block_size + 1)
    throw FormatError("container: inconsistent header parameters");
  const std::size_t records = c.blocks_per_channel() * c.channels;
  const std::size_t record_bytes = 4u * c.m_size;
  if (bytes.size() != kHeaderSize + records * record_bytes)
    throw FormatError("container: payload length mismatch (expected " +
                      std::to_string(kHeaderSize + records * record_bytes) + " bytes, have " +
                      std::to_string(bytes.size()) + ")");
  c.blocks.resize(records);
  const int v_len = c.m_size - c.p1;
  std::size_t pos = kHeaderSize;
  for (BlockMeasurements& m : c.blocks) {
    m.y_u.resize(c.p1);
    for (int i = 0; i < c.p1; ++i, pos += 4) {
      const std::uint32_t bits = get_u32(bytes, pos);
      float f;
      std::memcpy(&f, &bits, 4);
      m.y_u[i] = f;
    }
    m.y_v.resize(v_len);
    for (int i = 0; i < v_len; ++i, pos += 4)
      m.y_v[i] = static_cast<std::int32_t>(get_u32(bytes, pos));
  }
  return c;
}

StegoContainer measure_cover(const Image& cover, const StegoKey& skey) {
  skey.validate();
  if (cover.width % skey.block_size != 0 || cover.height % skey.block_size != 0)
    throw ConfigError("measure_cover: block size " + std::to_string(skey.block_size) +
                      " does not divide " + std::to_string(cover.width) + "x" +
                      std::to_string(cover.height));
  const MeasurementMatrices mm = derive_matrices(skey);
  const ZigzagOrder order = zigzag_order(skey.block_size);
  StegoContainer c;
  c.width = static_cast<std::uint32_t>(cover.width);
  c.height = static_cast<std::uint32_t>(cover.height);
  c.channels = static_cast<std::uint16_t>(cover.channels);
  c.block_size = static_cast<std::uint16_t>(skey.block_size);
  c.p1 = static_cast<std::uint16_t>(skey.p1);
  c.m_size = static_cast<std::uint16_t>(skey.m_size);
  c.blocks.reserve(c.blocks_per_channel() * c.channels);
  for (const Image& plane : split_channels(cover))
    for (const Eigen::MatrixXd& block : split_blocks(plane, skey.block_size))
      c.blocks.push_back(measure(sparsify(block, skey.p1, order), mm));
  return c;
}

StegoContainer embed_file(const Image& cover, const BitString& payload, const StegoKey& skey,
                          const DesKey& dkey) {
  StegoContainer c = measure_cover(cover, skey);
  const BitString ciphertext = encrypt_payload(payload, dkey);
  const std::size_t cap = capacity(c.blocks);
  if (ciphertext.size() > cap)
    throw CapacityError("embed_file: encrypted payload needs " +
                        std::to_string(ciphertext.size()) + " bits but capacity is " +
                        std::to_string(cap) + "; try shorter secret data");
  c.blocks = embed_stream(ciphertext, c.blocks);
  return c;
}

BitString extract_file(const StegoContainer& container, const DesKey& dkey) {
  return decrypt_payload(extract_stream(container.blocks), dkey);
}

Image construct_stego_image(const StegoContainer& container, const StegoKey& skey,
                            const ConstructOptions& opts) {
  check_container_key(container, skey, "construct_stego_image");
  const MeasurementMatrices mm = derive_matrices(skey);
  const ZigzagOrder order = zigzag_order(skey.block_size);
  const AdmmLassoSolver solver(mm.phi_v, opts.lambda, opts.admm);
  const std::size_t per_channel = container.blocks_per_channel();
  std::vector<Image> planes;
  planes.reserve(container.channels);
  for (int ch = 0; ch < container.channels; ++ch) {
    std::vector<Eigen::MatrixXd> blocks;
    blocks.reserve(per_channel);
    for (std::size_t b = 0; b < per_channel; ++b) {
      const std::size_t idx = ch * per_channel + b;
      const BlockMeasurements& m = container.blocks[idx];
      SparseBlockVector sv;
      sv.p1 = skey.p1;
      sv.coeffs.resize(skey.block_size * skey.block_size);
      sv.coeffs.head(skey.p1) = invert_u(m.y_u, mm.alpha);
      try {
        sv.coeffs.tail(skey.p2()) = solver.solve(m.y_v.cast<double>()).solution;
      } catch (const NumericError& e) {
        throw NumericError("construct_stego_image: block " + std::to_string(idx) + ": " +
                           e.what());
      }
      blocks.push_back(densify(sv, order));
    }
    planes.push_back(merge_blocks(blocks, static_cast<int>(container.width),
                                  static_cast<int>(container.height)));
  }
  return merge_channels(planes);
}

ImageExtraction extract_from_image(const Image& stego, const StegoKey& skey, const DesKey& dkey,
                                   const BitString* reference_payload) {
  ImageExtraction out;
  out.raw_stream = extract_stream(measure_cover(stego, skey).blocks);
  try {
    out.payload = decrypt_payload(out.raw_stream, dkey);
    out.framing_ok = true;
  } catch (const FramingError& e) {
    out.framing_message = e.what();
  }
  if (reference_payload) {
    if (out.framing_ok && out.payload.size() == reference_payload->size())
      out.payload_ber = ber(out.payload, *reference_payload);
    const BitString ref_ct = encrypt_payload(*reference_payload, dkey);
    const std::size_t n = std::min(out.raw_stream.size(), ref_ct.size());
    if (n > 0) out.stream_ber = ber(out.raw_stream.prefix(n), ref_ct.prefix(n));
  }
  return out;
}

BitString random_payload(std::size_t bit_count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  BitString bits;
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bit_count; ++i) {
    if (i % 64 == 0) word = rng.next();
    bits.push_back((word >> (63 - i % 64)) & 1);
  }
  return bits;
}

WrongKeyStats wrong_key_resistance(const Image& stego, const StegoKey& skey, const DesKey& dkey,
                                   const BitString& reference_payload, int trials) {
  WrongKeyStats stats;
  stats.trials = trials;
  double ber_sum = 0.0;
  int ber_count = 0;
  for (int t = 1; t <= trials; ++t) {
    StegoKey wrong = skey;
    wrong.seed = skey.seed + static_cast<std::uint64_t>(t);
    const ImageExtraction ex = extract_from_image(stego, wrong, dkey, &reference_payload);
    const bool recovered = ex.payload_ber.has_value() && *ex.payload_ber < 20.0;
    if (!recovered) ++stats.resistant;
    if (ex.stream_ber) {
      ber_sum += *ex.stream_ber;
      ++ber_count;
    }
  }
  if (ber_count > 0) stats.mean_stream_ber = ber_sum / ber_count;
  return stats;
}

EvaluationRun evaluate(const Image& cover, const StegoKey& skey, const DesKey& dkey,
                       const EvaluateOptions& opts) {
  EvaluationRun run;
  run.key = skey;
  run.lambda = opts.construct.lambda;
  run.rho = opts.construct.admm.rho;
  run.payload_seed = opts.payload_seed;

  const StegoContainer plain = measure_cover(cover, skey);
  run.capacity_bits = capacity(plain.blocks);

  // largest payload whose encrypted frame still fits
  const double fraction = std::clamp(opts.payload_fraction, 0.0, 1.0);
  const std::size_t frame_blocks = run.capacity_bits / 64;
  const std::size_t max_bits = frame_blocks >= 2 ? (frame_blocks - 1) * 64 : 0;
  run.payload_bits = std::min(
      static_cast<std::size_t>(fraction * static_cast<double>(run.capacity_bits)), max_bits);
  const BitString payload = random_payload(run.payload_bits, opts.payload_seed);

  double t0 = now_ms();
  StegoContainer stego = plain;
  stego.blocks = embed_stream(encrypt_payload(payload, dkey), stego.blocks);
  run.embed_ms = now_ms() - t0;

  run.add_sub = add_sub_profile(plain.blocks, stego.blocks);

  t0 = now_ms();
  const Image stego_img = construct_stego_image(stego, skey, opts.construct);
  run.construct_ms = now_ms() - t0;

  t0 = now_ms();
  const BitString extracted = extract_file(stego, dkey);
  run.extract_ms = now_ms() - t0;
  run.ber_percent = ber(extracted, payload);

  run.quality = quality_report(cover, stego_img);
  run.quality.capacity_bits = run.capacity_bits;
  run.quality.sampling_rate = sampling_rate(skey.m_size, skey.block_size);

  const ImageExtraction img_ex = extract_from_image(stego_img, skey, dkey, &payload);
  if (img_ex.stream_ber) run.correct_key_image_ber = *img_ex.stream_ber;

  if (opts.wrong_key_trials > 0)
    run.wrong_key = wrong_key_resistance(stego_img, skey, dkey, payload, opts.wrong_key_trials);
  return run;
}

std::string render_report(const EvaluationRun& run) {
  std::ostringstream os;
  os << "seed=" << run.key.seed << "\n"
     << "block_size=" << run.key.block_size << "\n"
     << "p1=" << run.key.p1 << "\n"
     << "m=" << run.key.m_size << "\n"
     << "alpha=" << fmt(run.key.alpha) << "\n"
     << "lambda=" << fmt(run.lambda) << "\n"
     << "rho=" << fmt(run.rho) << "\n"
     << "payload_seed=" << run.payload_seed << "\n"
     << "capacity_bits=" << run.capacity_bits << "\n"
     << "payload_bits=" << run.payload_bits << "\n"
     << "sampling_rate=" << fmt(run.quality.sampling_rate) << "\n"
     << "ber_percent=" << fmt(run.ber_percent) << "\n"
     << "mse=" << fmt(run.quality.mse) << "\n"
     << "psnr_db=" << fmt(run.quality.psnr_db) << "\n"
     << "mssim=" << fmt(run.quality.mssim) << "\n"
     << "ncc=" << fmt(run.quality.ncc) << "\n";
  for (std::size_t ch = 0; ch < run.quality.ncc_per_channel.size(); ++ch)
    os << "ncc_channel_" << ch << "=" << fmt(run.quality.ncc_per_channel[ch]) << "\n";
  os << "entropy_cover=" << fmt(run.quality.entropy_cover) << "\n"
     << "entropy_stego=" << fmt(run.quality.entropy_stego) << "\n"
     << "p_add=" << fmt(run.add_sub.p_add) << "\n"
     << "p_sub=" << fmt(run.add_sub.p_sub) << "\n"
     << "modified_entries=" << run.add_sub.modified << "\n"
     << "image_stream_ber=" << fmt(run.correct_key_image_ber) << "\n";
  if (run.wrong_key.trials > 0) {
    os << "wrong_key_trials=" << run.wrong_key.trials << "\n"
       << "wrong_key_resistant=" << run.wrong_key.resistant << "\n"
       << "wrong_key_mean_stream_ber=" << fmt(run.wrong_key.mean_stream_ber) << "\n";
  }
  os << "embed_ms=" << fmt(run.embed_ms) << "\n"
     << "construct_ms=" << fmt(run.construct_ms) << "\n"
     << "extract_ms=" << fmt(run.extract_ms) << "\n";
  return os.str();
}

std::string render_report_json(const EvaluationRun& run) {
  nlohmann::json j;
  j["seed"] = run.key.seed;
  j["block_size"] = run.key.block_size;
  j["p1"] = run.key.p1;
  j["m"] = run.key.m_size;
  j["alpha"] = run.key.alpha;
  j["lambda"] = run.lambda;
  j["rho"] = run.rho;
  j["payload_seed"] = run.payload_seed;
  j["capacity_bits"] = run.capacity_bits;
  j["payload_bits"] = run.payload_bits;
  j["sampling_rate"] = run.quality.sampling_rate;
  j["ber_percent"] = run.ber_percent;
  j["mse"] = run.quality.mse;
  // nlohmann emits null for non-finite doubles; infinite PSNR means identical images
  j["psnr_db"] = run.quality.psnr_db;
  j["mssim"] = run.quality.mssim;
  j["ncc"] = run.quality.ncc;
  j["ncc_per_channel"] = run.quality.ncc_per_channel;
  j["entropy_cover"] = run.quality.entropy_cover;
  j["entropy_stego"] = run.quality.entropy_stego;
  j["p_add"] = run.add_sub.p_add;
  j["p_sub"] = run.add_sub.p_sub;
  j["modified_entries"] = run.add_sub.modified;
  j["image_stream_ber"] = run.correct_key_image_ber;
  if (run.wrong_key.trials > 0) {
    j["wrong_key_trials"] = run.wrong_key.trials;
    j["wrong_key_resistant"] = run.wrong_key.resistant;
    j["wrong_key_mean_stream_ber"] = run.wrong_key.mean_stream_ber;
  }
  j["embed_ms"] = run.embed_ms;
  j["construct_ms"] = run.construct_ms;
  j["extract_ms"] = run.extract_ms;
  return j.dump(2);
}

}  // namespace csis
