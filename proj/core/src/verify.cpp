#include "steinberg/verify.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>

#include "steinberg/roots.hpp"
#include "suite_util.hpp"

namespace steinberg {

namespace {

using json = nlohmann::json;

const std::map<std::string, void (*)(detail::SuiteContext&)>& registry() {
  static const std::map<std::string, void (*)(detail::SuiteContext&)> r = {
      {"chevalley-relations", detail::suite_chevalley}, {"vdk-identities", detail::suite_vdk},
      {"tulenbaev-identities", detail::suite_tulenbaev}, {"xeqy", detail::suite_xeqy},
      {"star-presentation", detail::suite_star},       {"psi-s-relations", detail::suite_psi},
      {"k2-exact", detail::suite_k2},                   {"relative-generation", detail::suite_relative},
      {"amalgam", detail::suite_amalgam},               {"tmap-diagram", detail::suite_tmap},
  };
  return r;
}

template <class T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw SpecError(std::string("config key '") + key + "' has the wrong type");
  }
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (j.is_string()) return {j.get<std::string>()};
  if (!j.is_array()) throw SpecError(std::string("config key '") + key + "' must be a string or a list of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw SpecError(std::string("config key '") + key + "' must list strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteConfig SuiteConfig::from_json(const json& j) {
  if (!j.is_object()) throw SpecError("config must be a JSON object");
  SuiteConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "suite") {
      c.suite = get_as<std::string>(v, "suite");
    } else if (key == "rings" || key == "ring") {
      c.rings = string_list(v, "rings");
    } else if (key == "systems" || key == "system") {
      c.systems = string_list(v, "systems");
    } else if (key == "n") {
      c.n = get_as<std::size_t>(v, "n");
    } else if (key == "ideal") {
      if (!v.is_null()) c.ideal = get_as<std::string>(v, "ideal");
    } else if (key == "element") {
      if (!v.is_null()) c.element = get_as<std::string>(v, "element");
    } else if (key == "samples") {
      if (!v.is_null()) c.samples = get_as<std::size_t>(v, "samples");
    } else if (key == "seed") {
      c.seed = get_as<std::uint64_t>(v, "seed");
    } else if (key == "tier") {
      c.tier = get_as<std::string>(v, "tier");
    } else if (key == "caps") {
      if (!v.is_object()) throw SpecError("config key 'caps' must be an object");
      for (const auto& [ck, cv] : v.items()) {
        if (ck == "max_cosets")
          c.caps.max_cosets = get_as<std::size_t>(cv, "caps.max_cosets");
        else if (ck == "max_rows")
          c.caps.max_rows = get_as<std::size_t>(cv, "caps.max_rows");
        else
          throw SpecError("unknown caps key '" + ck + "'");
      }
    } else if (key == "inject_fault") {
      c.inject_fault = get_as<bool>(v, "inject_fault");
    } else {
      throw SpecError("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

void SuiteConfig::validate() const {
  if (!registry().count(suite)) throw SpecError("unknown suite '" + suite + "'");
  if (tier != "exact" && tier != "matrix" && tier != "auto")
    throw SpecError("tier must be exact, matrix or auto, got '" + tier + "'");
  if (n < 4) throw SpecError("n must be at least 4");
  for (const auto& r : rings) make_ring(r);
  for (const auto& sys : systems) RootDatum::parse(sys);
  if (caps.max_cosets == 0 || caps.max_rows < caps.max_cosets) throw SpecError("caps: need 0 < max_cosets <= max_rows");
}

json SuiteConfig::to_json() const {
  json j;
  j["suite"] = suite;
  j["rings"] = rings;
  j["systems"] = systems;
  j["n"] = n;
  j["ideal"] = ideal ? json(*ideal) : json(nullptr);
  j["element"] = element ? json(*element) : json(nullptr);
  j["samples"] = samples ? json(*samples) : json(nullptr);
  j["seed"] = seed;
  j["tier"] = tier;
  j["caps"] = {{"max_cosets", caps.max_cosets}, {"max_rows", caps.max_rows}};
  j["inject_fault"] = inject_fault;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

// ---------------------------------------------------------------------------

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

json VerificationReport::to_json() const {
  json j;
  j["schema"] = schema;
  j["suite"] = suite;
  j["config"] = config;
  j["pass"] = pass();
  j["warnings"] = warnings;
  json cs = json::array();
  std::size_t failures = 0;
  for (const auto& c : checks) {
    failures += c.failures;
    cs.push_back({{"name", c.name},
                  {"tier", c.tier},
                  {"exhaustive", c.exhaustive},
                  {"instances", c.instances},
                  {"failures", c.failures},
                  {"inconclusive", c.inconclusive},
                  {"required", c.required},
                  {"pass", c.pass()},
                  {"note", c.note},
                  {"witnesses", c.witnesses},
                  {"data", c.data}});
  }
  j["checks"] = std::move(cs);
  j["failures"] = failures;
  return j;
}

std::string VerificationReport::json_text() const { return to_json().dump(2) + "\n"; }

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.pass() ? "ok  " : "FAIL") << " " << c.name << " [" << c.tier << ", "
       << (c.exhaustive ? "exhaustive" : "sampled") << "] " << c.instances << " instances, " << c.failures
       << " failures";
    if (c.inconclusive) os << ", inconclusive";
    os << std::fixed << std::setprecision(3) << " (" << c.seconds << " s)";
    if (!c.note.empty()) os << " - " << c.note;
    os << "\n";
    if (!c.data.empty()) os << "       data " << c.data.dump() << "\n";
    for (const auto& w : c.witnesses) os << "       witness " << w << "\n";
  }
  for (const auto& w : warnings) os << "  warning: " << w << "\n";
  return os.str();
}

VerificationReport run_suite(const SuiteConfig& config) {
  config.validate();
  VerificationReport report;
  report.suite = config.suite;
  report.config = config.to_json();
  detail::SuiteContext ctx{config, report, std::mt19937_64(config.seed)};
  registry().at(config.suite)(ctx);
  if (config.samples && *config.samples == 0)
    report.warnings.push_back("samples = 0: sampled checks ran no instances and pass vacuously");
  if (config.inject_fault) {
    detail::CheckBuilder b("injected-fault", "matrix", true);
    const auto ring = make_ring(config.rings.empty() ? "f2" : config.rings.front());
    const StWord w = xij(ring, config.n, 0, 1, ring->one());
    const StWord id = empty_word(type_a(config.n), ring);
    b.record(MatrixEquality().equal(w, id), [&] { return detail::words_witness(ring, "x_12(1) = 1", w, id); });
    b.note("deliberately false equality");
    report.checks.push_back(b.finish());
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace detail {

CheckBuilder::CheckBuilder(std::string name, std::string tier, bool exhaustive)
    : start_(std::chrono::steady_clock::now()) {
  rec_.name = std::move(name);
  rec_.tier = std::move(tier);
  rec_.exhaustive = exhaustive;
}

void CheckBuilder::record(bool ok, const std::function<std::string()>& witness) {
  ++rec_.instances;
  if (ok) return;
  ++rec_.failures;
  if (rec_.witnesses.size() < CheckRecord::max_witnesses) rec_.witnesses.push_back(witness());
}

void CheckBuilder::inconclusive(const std::string& why) {
  rec_.inconclusive = true;
  rec_.note = why;
}

CheckRecord CheckBuilder::finish() {
  rec_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return std::move(rec_);
}

double power_size(const RingHandle& ring, double k) {
  if (!ring->is_finite()) return std::numeric_limits<double>::infinity();
  return std::pow(static_cast<double>(ring->size()), k);
}

std::vector<RVector> all_vectors(const RingHandle& ring, std::size_t n) {
  const auto elems = ring->elements();
  std::vector<RVector> out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    RVector v = RVector::zero(ring, n);
    for (std::size_t k = 0; k < n; ++k) v[k] = elems[idx[k]];
    out.push_back(std::move(v));
    std::size_t k = n;
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++idx[k] < elems.size()) break;
      idx[k] = 0;
    }
  }
}

Value random_element(const RingHandle& ring, std::mt19937_64& rng, int size) {
  if (ring->is_finite()) {
    const auto elems = ring->elements();
    return elems[std::uniform_int_distribution<std::size_t>(0, elems.size() - 1)(rng)];
  }
  return ring->sample(rng, size);
}

RVector random_vector(const RingHandle& ring, std::size_t n, std::mt19937_64& rng, int size) {
  RVector v = RVector::zero(ring, n);
  for (std::size_t k = 0; k < n; ++k) v[k] = random_element(ring, rng, size);
  return v;
}

StWord random_elementary(const RingHandle& ring, std::size_t n, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  StWord w = empty_word(type_a(n), ring);
  while (w.length() < length) {
    const auto i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Value r = random_element(ring, rng);
    if (ring->is_zero(r)) r = ring->one();
    w *= xij(ring, n, i, j, r);
  }
  return w;
}

RVector pair_vector(const RVector& u, std::size_t p, std::size_t q) {
  RVector t = RVector::zero(u.ring, u.size());
  t[p] = u[q];
  t[q] = u.ring->neg(u[p]);
  return t;
}

std::vector<RVector> pair_terms_of(const RVector& u, const std::vector<Value>& coeffs) {
  std::vector<RVector> out;
  std::size_t k = 0;
  for (std::size_t p = 0; p < u.size(); ++p)
    for (std::size_t q = p + 1; q < u.size(); ++q, ++k)
      if (!u.ring->is_zero(coeffs.at(k))) out.push_back(pair_vector(u, p, q).scaled(coeffs[k]));
  return out;
}

std::shared_ptr<const SteinbergTable> cached_table(const RootSystem& system, const RingHandle& ring,
                                                   const EnumerationCaps& caps) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const SteinbergTable>> cache;
  const std::string key = system->name() + "|" + ring->spec() + "|" + std::to_string(caps.max_cosets) + "|" +
                          std::to_string(caps.max_rows);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end() && same_ring(it->second->presentation->ring, ring)) return it->second;
  auto t = std::make_shared<const SteinbergTable>(steinberg_table(system, ring, caps));
  cache[key] = t;
  return t;
}

std::shared_ptr<const WordEquality> equality_for(const std::string& policy, std::size_t n, const RingHandle& ring,
                                                 const EnumerationCaps& caps) {
  bool exact = policy == "exact";
  // auto: exact when |R|^(n^2-1), the order of SL_n(R) for a field, is small.
  if (policy == "auto") exact = ring->is_finite() && power_size(ring, double(n * n - 1)) <= 65536.0;
  if (!exact) return std::make_shared<MatrixEquality>();
  if (!ring->is_finite()) throw DomainError("exact tier needs a finite ring, got " + ring->spec());
  return std::make_shared<ExactEquality>(cached_table(type_a(n), ring, caps));
}

std::string words_witness(const RingHandle& ring, const std::string& what, const StWord& lhs, const StWord& rhs) {
  return "ring=" + ring->spec() + " " + what + " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
}

}  // namespace detail

}  // namespace steinberg
