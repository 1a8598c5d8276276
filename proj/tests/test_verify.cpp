#include <doctest.h>

#include "steinberg/verify.hpp"

using namespace steinberg;
using nlohmann::json;

TEST_CASE("config parsing") {
  const auto c = SuiteConfig::from_json(json::parse(R"({"suite":"k2-exact","systems":["A2"],"rings":["f2"],"seed":9})"));
  CHECK(c.suite == "k2-exact");
  CHECK(c.seed == 9);
  CHECK(c.systems == std::vector<std::string>{"A2"});
  CHECK(SuiteConfig::from_json(c.to_json()).to_json() == c.to_json());
  for (const char* bad : {R"({"suite":"nope"})", R"({"suite":"k2-exact","colour":1})", R"({"suite":"k2-exact","seed":"x"})",
                          R"({"suite":"k2-exact","tier":"fuzzy"})", R"({"suite":"k2-exact","rings":["z/"]})",
                          R"({"suite":"k2-exact","systems":["B2"]})", R"({"suite":"k2-exact","n":1})", R"([1,2])"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(SuiteConfig::from_json(json::parse(bad)).validate(), SpecError);
  }
}

TEST_CASE("chevalley relations over A3 and z/6 pass") {
  SuiteConfig c;
  c.suite = "chevalley-relations";
  c.systems = {"A3"};
  c.rings = {"z/6"};
  const auto r = run_suite(c);
  CHECK(r.pass());
  for (const auto& ch : r.checks) {
    CHECK(ch.failures == 0);
    CHECK(ch.exhaustive);
    CHECK(ch.instances > 0);
  }
}

TEST_CASE("k2 report for A2 over f2") {
  SuiteConfig c;
  c.suite = "k2-exact";
  c.systems = {"A2"};
  c.rings = {"f2"};
  const auto r = run_suite(c);
  CHECK(r.pass());
  bool found = false;
  for (const auto& ch : r.checks)
    if (ch.data.contains("kernel_order")) {
      found = true;
      CHECK(ch.data["image_order"] == 168);
      CHECK(ch.data["st_order"].get<std::size_t>() == ch.data["kernel_order"].get<std::size_t>() * 168);
    }
  CHECK(found);
}

TEST_CASE("zero samples pass vacuously with a warning") {
  SuiteConfig c;
  c.suite = "vdk-identities";
  c.rings = {"z/6"};
  c.samples = 0;
  const auto r = run_suite(c);
  CHECK(r.pass());
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("an injected fault fails with a witness") {
  SuiteConfig c;
  c.suite = "chevalley-relations";
  c.systems = {"A3"};
  c.rings = {"f2"};
  c.inject_fault = true;
  const auto r = run_suite(c);
  CHECK_FALSE(r.pass());
  std::size_t witnesses = 0;
  for (const auto& ch : r.checks)
    if (!ch.pass()) witnesses += ch.witnesses.size();
  CHECK(witnesses > 0);
}

TEST_CASE("identical configs give byte-identical JSON") {
  SuiteConfig c;
  c.suite = "tulenbaev-identities";
  c.rings = {"z/6"};
  c.samples = 40;
  c.seed = 17;
  const auto a = run_suite(c).json_text(), b = run_suite(c).json_text();
  CHECK(a == b);
  c.seed = 18;
  CHECK(run_suite(c).json_text() != a);
  CHECK(json::parse(a)["schema"] == "steinberg-verify/1");
}
