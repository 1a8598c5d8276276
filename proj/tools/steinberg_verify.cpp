// Runs one verification suite and writes its report.
// Exit status: 0 pass, 1 fail, 2 invalid usage or config.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "steinberg/verify.hpp"

namespace {

nlohmann::json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw steinberg::SpecError("cannot read config " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw steinberg::SpecError("config " + path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify Steinberg group identities and presentations"};
  std::string config_path, suite, ring, system, tier, out;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool list = false;
  app.add_option("--config", config_path, "JSON suite configuration");
  app.add_option("--suite", suite, "suite name (overrides the config)");
  app.add_option("--ring", ring, "ring spec (replaces the configured rings)");
  app.add_option("--system", system, "root system name (replaces the configured systems)");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* samples_opt = app.add_option("--samples", samples, "sample count for sampled checks");
  app.add_option("--tier", tier, "equality tier")->check(CLI::IsMember({"exact", "matrix", "auto"}));
  app.add_option("--out", out, "write the JSON report here");
  app.add_flag("--list", list, "list suite names and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& s : steinberg::suite_names()) std::cout << s << "\n";
    return 0;
  }
  try {
    nlohmann::json j = config_path.empty() ? nlohmann::json::object() : read_config(config_path);
    if (!suite.empty()) j["suite"] = suite;
    if (!ring.empty()) j["rings"] = nlohmann::json::array({ring});
    if (!system.empty()) j["systems"] = nlohmann::json::array({system});
    if (*seed_opt) j["seed"] = seed;
    if (*samples_opt) j["samples"] = samples;
    if (!tier.empty()) j["tier"] = tier;
    if (!j.contains("suite")) throw steinberg::SpecError("no suite given (use --suite or a config)");
    const auto config = steinberg::SuiteConfig::from_json(j);
    const auto report = steinberg::run_suite(config);
    std::cout << report.to_text();
    if (!out.empty()) {
      std::ofstream f(out, std::ios::binary);
      f << report.json_text();
      if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return 2;
      }
    }
    return report.pass() ? 0 : 1;
  } catch (const steinberg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
