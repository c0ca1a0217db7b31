// Generates deterministic textured test covers (PNM).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "csis/errors.hpp"
#include "csis/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"csis-mkimage: synthetic textured test covers"};
  std::string recipe = "terrain", out;
  int width = 512, height = 512, channels = 1;
  std::uint64_t seed = 1;
  app.add_option("--recipe", recipe, "terrain | plasma | rings")->capture_default_str();
  app.add_option("--width", width)->capture_default_str();
  app.add_option("--height", height)->capture_default_str();
  app.add_option("--channels", channels, "1 (P5) or 3 (P6)")->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  app.add_option("--out", out, "output PNM path")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const csis::Image img = csis::synthetic_cover(recipe, width, height, seed, channels);
    const auto bytes = csis::save_pnm(img);
    std::ofstream f(out, std::ios::binary);
    if (!f) throw csis::FormatError("cannot write " + out);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    std::cout << "wrote " << out << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return csis::kExitFailure;
  }
}
