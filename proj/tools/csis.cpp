// Command-line front end for the CSIS stego toolkit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <vector>

#include "csis/errors.hpp"
#include "csis/pipeline.hpp"
#include "csis/synthetic.hpp"

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw csis::FormatError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw csis::FormatError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw csis::FormatError("cannot write " + path);
  out << text;
}

struct KeyFlags {
  std::string key_file;
  std::uint64_t seed = 0;
  int block_size = 8;
  int p1 = 12;
  int m = 37;
  double alpha = 1.0;

  void add_to(CLI::App* cmd, bool with_file = true) {
    if (with_file) cmd->add_option("--key", key_file, "key file (overrides parameter flags)");
    cmd->add_option("--seed", seed, "key seed");
    cmd->add_option("--block-size", block_size, "block side B")->capture_default_str();
    cmd->add_option("--p1", p1, "ordinary (low-frequency) sample count")->capture_default_str();
    cmd->add_option("--m", m, "total measurements |m| per block")->capture_default_str();
    cmd->add_option("--alpha", alpha, "Phi_u scale")->capture_default_str();
  }

  csis::StegoKey resolve() const {
    if (!key_file.empty()) return csis::load_key(read_file(key_file));
    csis::StegoKey key{seed, block_size, p1, m, alpha};
    key.validate();
    return key;
  }
};

struct SolverFlags {
  csis::ConstructOptions opts;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--lambda", opts.lambda, "LASSO weight")->capture_default_str();
    cmd->add_option("--rho", opts.admm.rho, "ADMM penalty")->capture_default_str();
    cmd->add_option("--eps-abs", opts.admm.eps_abs, "absolute tolerance")->capture_default_str();
    cmd->add_option("--eps-rel", opts.admm.eps_rel, "relative tolerance")->capture_default_str();
    cmd->add_option("--max-iter", opts.admm.max_iter, "iteration cap")->capture_default_str();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"CSIS: compressed-sensing image steganography"};
  app.require_subcommand(1);

  // keygen
  auto* keygen = app.add_subcommand("keygen", "write a key file");
  KeyFlags kg;
  kg.add_to(keygen, false);
  keygen->get_option("--seed")->required();
  std::string kg_out;
  keygen->add_option("--out", kg_out, "output key file")->required();

  // embed
  auto* embed = app.add_subcommand("embed", "embed a payload file into a cover image");
  KeyFlags ek;
  ek.add_to(embed);
  std::string e_cover, e_payload, e_out, e_des;
  embed->add_option("--cover", e_cover, "cover image (P5/P6 PNM)")->required();
  embed->add_option("--payload", e_payload, "payload file (raw bytes)")->required();
  embed->add_option("--des-key", e_des, "DES key, 16 hex chars")->required();
  embed->add_option("--out", e_out, "output stego container")->required();

  // extract
  auto* extract = app.add_subcommand("extract", "extract the payload from a container");
  std::string x_container, x_out, x_des;
  extract->add_option("--container", x_container, "stego container")->required();
  extract->add_option("--des-key", x_des, "DES key, 16 hex chars")->required();
  extract->add_option("--out", x_out, "output payload file")->required();

  // construct
  auto* construct = app.add_subcommand("construct", "build the stego-image from a container");
  KeyFlags ck;
  ck.add_to(construct);
  SolverFlags cs;
  cs.add_to(construct);
  std::string c_container, c_out;
  construct->add_option("--container", c_container, "stego container")->required();
  construct->add_option("--out", c_out, "output PNM image")->required();

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "embed/construct/extract with a random payload "
                                                  "and report capacity, quality and security metrics");
  KeyFlags vk;
  vk.add_to(evaluate);
  SolverFlags vs;
  vs.add_to(evaluate);
  std::string v_cover, v_des = "133457799BBCDFF1", v_report, v_json;
  csis::EvaluateOptions vopts;
  evaluate->add_option("--cover", v_cover, "cover image")->required();
  evaluate->add_option("--des-key", v_des, "DES key, 16 hex chars")->capture_default_str();
  evaluate->add_option("--payload-fraction", vopts.payload_fraction, "fraction of capacity")
      ->capture_default_str();
  evaluate->add_option("--payload-seed", vopts.payload_seed, "payload RNG seed")
      ->capture_default_str();
  evaluate->add_option("--wrong-key-trials", vopts.wrong_key_trials,
                       "perturbed-key extraction trials")->capture_default_str();
  evaluate->add_option("--report", v_report, "write the key=value report here");
  evaluate->add_option("--json", v_json, "write the JSON report here");

  // inspect
  auto* inspect = app.add_subcommand("inspect", "describe a container or key file");
  std::string i_container, i_key;
  inspect->add_option("--container", i_container, "stego container");
  inspect->add_option("--key", i_key, "key file");

  CLI11_PARSE(app, argc, argv);

  if (keygen->parsed()) {
    csis::StegoKey key{kg.seed, kg.block_size, kg.p1, kg.m, kg.alpha};
    write_file(kg_out, csis::save_key(key));
    std::cout << "wrote " << kg_out << "\n";
    return csis::kExitOk;
  }

  if (embed->parsed()) {
    const csis::Image cover = csis::load_pnm(read_file(e_cover));
    const auto payload_bytes = read_file(e_payload);
    const csis::BitString payload = csis::BitString::from_bytes(payload_bytes);
    const csis::StegoContainer c =
        csis::embed_file(cover, payload, ek.resolve(), csis::DesKey::from_hex(e_des));
    write_file(e_out, csis::serialize_container(c));
    std::cout << "embedded " << payload.size() << " bits into " << e_out << "\n";
    return csis::kExitOk;
  }

  if (extract->parsed()) {
    const csis::StegoContainer c = csis::parse_container(read_file(x_container));
    const csis::BitString payload = csis::extract_file(c, csis::DesKey::from_hex(x_des));
    write_file(x_out, payload.to_bytes());
    std::cout << "extracted " << payload.size() << " bits to " << x_out << "\n";
    return csis::kExitOk;
  }

  if (construct->parsed()) {
    const csis::StegoContainer c = csis::parse_container(read_file(c_container));
    const csis::Image img = csis::construct_stego_image(c, ck.resolve(), cs.opts);
    write_file(c_out, csis::save_pnm(img));
    std::cout << "constructed " << c_out << "\n";
    return csis::kExitOk;
  }

  if (evaluate->parsed()) {
    const csis::Image cover = csis::load_pnm(read_file(v_cover));
    vopts.construct = vs.opts;
    const csis::EvaluationRun run =
        csis::evaluate(cover, vk.resolve(), csis::DesKey::from_hex(v_des), vopts);
    const std::string report = csis::render_report(run);
    std::cout << report;
    if (!v_report.empty()) write_text(v_report, report);
    if (!v_json.empty()) write_text(v_json, csis::render_report_json(run));
    return csis::kExitOk;
  }

  if (inspect->parsed()) {
    if (!i_key.empty()) {
      const csis::StegoKey key = csis::load_key(read_file(i_key));
      std::cout << "key seed=" << key.seed << " B=" << key.block_size << " p1=" << key.p1
                << " m=" << key.m_size << " alpha=" << key.alpha << "\n";
    }
    if (!i_container.empty()) {
      const csis::StegoContainer c = csis::parse_container(read_file(i_container));
      std::cout << "container " << c.width << "x" << c.height << " channels=" << c.channels
                << " B=" << c.block_size << " p1=" << c.p1 << " m=" << c.m_size << "\n"
                << "blocks=" << c.blocks.size() << " capacity_bits=" << csis::capacity(c.blocks)
                << "\n";
      std::vector<int> all;
      for (const auto& m : c.blocks)
        for (Eigen::Index i = 0; i < m.y_v.size(); ++i) all.push_back(m.y_v[i]);
      const csis::Histogram h = csis::histogram(all, 17);
      std::cout << "y_v histogram (bin width " << h.bin_width << ", from " << h.lo << "):\n";
      for (std::size_t b = 0; b < h.counts.size(); ++b)
        std::cout << "  [" << h.lo + static_cast<long long>(b) * h.bin_width << ".."
                  << h.lo + static_cast<long long>(b + 1) * h.bin_width - 1
                  << "] " << h.counts[b] << "\n";
    }
    if (i_key.empty() && i_container.empty())
      throw csis::ConfigError("inspect: give --container and/or --key");
    return csis::kExitOk;
  }

  return csis::kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const csis::FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return csis::kExitFormatError;
  } catch (const csis::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return csis::kExitConfigError;
  } catch (const csis::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return csis::kExitCapacityError;
  } catch (const csis::FramingError& e) {
    std::cerr << "framing error: " << e.what() << "\n";
    return csis::kExitFramingError;
  } catch (const csis::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return csis::kExitNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return csis::kExitFailure;
  }
}
