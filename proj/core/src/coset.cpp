#include "steinberg/coset.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>

#include "steinberg/error.hpp"

namespace steinberg {

namespace {

constexpr std::uint64_t fnv_offset = 1469598103934665603ull;
constexpr std::uint64_t fnv_prime = 1099511628211ull;

void fnv_bytes(std::uint64_t& h, const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= fnv_prime;
  }
}

void fnv_u64(std::uint64_t& h, std::uint64_t v) { fnv_bytes(h, &v, sizeof v); }

}  // namespace

// ---------------------------------------------------------------------------

std::uint32_t Presentation::add_generator(const std::string& name, bool involution) {
  const auto col = static_cast<std::uint32_t>(names.size());
  names.push_back(name);
  if (involution) {
    inverse.push_back(col);
  } else {
    inverse.push_back(col + 1);
    names.push_back(name + "^-1");
    inverse.push_back(col);
  }
  return col;
}

std::uint32_t Presentation::add_generator_with_inverse(const std::string& name, std::uint32_t inv) {
  const auto col = static_cast<std::uint32_t>(names.size());
  names.push_back(name);
  inverse.push_back(inv);
  return col;
}

void Presentation::add_relator(Word w) {
  if (!w.empty()) relators.push_back(std::move(w));
}

Presentation::Word Presentation::inverse_word(const Word& w) const {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse[x];
  return out;
}

void Presentation::validate() const {
  if (inverse.size() != names.size()) throw SpecError("presentation: inverse map has wrong length");
  for (std::size_t c = 0; c < inverse.size(); ++c)
    if (inverse[c] >= names.size() || inverse[inverse[c]] != c)
      throw SpecError("presentation: column " + std::to_string(c) + " has no consistent inverse");
  for (const auto& r : relators)
    for (auto x : r)
      if (x >= names.size()) throw SpecError("presentation: relator references unindexed letter " + std::to_string(x));
}

std::uint64_t Presentation::digest() const {
  std::uint64_t h = fnv_offset;
  fnv_u64(h, names.size());
  for (const auto& n : names) {
    fnv_u64(h, n.size());
    fnv_bytes(h, n.data(), n.size());
  }
  for (auto i : inverse) fnv_u64(h, i);
  fnv_u64(h, relators.size());
  for (const auto& r : relators) {
    fnv_u64(h, r.size());
    for (auto x : r) fnv_u64(h, x);
  }
  return h;
}

// ---------------------------------------------------------------------------

CosetTable::CosetTable(std::size_t columns, std::size_t cosets, std::vector<std::int32_t> data)
    : columns_(columns), cosets_(cosets), data_(std::move(data)) {
  if (data_.size() != columns_ * cosets_) throw Error("coset table: data size mismatch");
}

std::size_t CosetTable::apply(std::size_t coset, const Presentation::Word& w) const {
  std::size_t c = coset;
  for (auto x : w) {
    if (x >= columns_) throw DomainError("coset table: unindexed letter " + std::to_string(x));
    c = static_cast<std::size_t>(data_[c * columns_ + x]);
  }
  return c;
}

std::vector<std::uint32_t> CosetTable::permutation(const Presentation::Word& w) const {
  std::vector<std::uint32_t> out(cosets_);
  for (std::size_t c = 0; c < cosets_; ++c) out[c] = static_cast<std::uint32_t>(apply(c, w));
  return out;
}

std::optional<std::string> CosetTable::verify(const Presentation& p) const {
  if (p.columns() != columns_) return "column count differs from the presentation";
  for (std::size_t x = 0; x < columns_; ++x) {
    std::vector<char> hit(cosets_, 0);
    for (std::size_t c = 0; c < cosets_; ++c) {
      const auto d = data_[c * columns_ + x];
      if (d < 0 || static_cast<std::size_t>(d) >= cosets_) return "column " + p.names[x] + " undefined";
      if (hit[d]) return "column " + p.names[x] + " is not a bijection";
      hit[d] = 1;
      if (static_cast<std::size_t>(data_[d * columns_ + p.inverse[x]]) != c)
        return "column " + p.names[x] + " disagrees with its inverse";
    }
  }
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (std::size_t c = 0; c < cosets_; ++c)
      if (apply(c, p.relators[r]) != c)
        return "relator " + std::to_string(r) + " moves coset " + std::to_string(c);
  return std::nullopt;
}

std::vector<Presentation::Word> CosetTable::coset_words() const {
  std::vector<Presentation::Word> words(cosets_);
  std::vector<char> seen(cosets_, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < columns_; ++x) {
      const auto d = static_cast<std::size_t>(data_[c * columns_ + x]);
      if (seen[d]) continue;
      seen[d] = 1;
      words[d] = words[c];
      words[d].push_back(static_cast<std::uint32_t>(x));
      queue.push_back(d);
    }
  }
  return words;
}

// ---------------------------------------------------------------------------

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationCaps& caps)
      : p_(p), caps_(caps), cols_(p.columns()), inv_(p.inverse.begin(), p.inverse.end()) {
    for (const auto& r : p.relators) max_relator_ = std::max(max_relator_, r.size());
    headroom_ = std::max(max_relator_, cols_) + 1;
    new_row();
    live_ = 1;
  }

  CosetTable run(const std::vector<Presentation::Word>& subgroup, EnumerationStats* stats) {
    std::size_t c = 0;
    for (const auto& h : subgroup) {
      ensure_room(c);
      scan_and_fill(0, h);
    }
    for (c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t r = 0; r < p_.relators.size() && alive(c); ++r) {
        ensure_room(c);
        scan_and_fill(static_cast<std::int32_t>(c), p_.relators[r]);
      }
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x)
        if (at(c, x) < 0) {
          ensure_room(c);
          if (!alive(c)) break;
          if (at(c, x) < 0) define(static_cast<std::int32_t>(c), x);
        }
    }
    if (stats) {
      stats->defined = defined_;
      stats->max_live = max_live_;
      stats->lookaheads = lookaheads_;
    }
    return standardize();
  }

 private:
  const Presentation& p_;
  EnumerationCaps caps_;
  std::size_t cols_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
  std::size_t live_ = 0;
  std::size_t max_relator_ = 0;
  std::size_t headroom_ = 0;
  std::size_t defined_ = 0, max_live_ = 0, lookaheads_ = 0;

  std::size_t rows() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  std::int32_t& at(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  std::int32_t new_row() {
    const auto id = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + cols_, CosetTable::undefined);
    return id;
  }

  void define(std::int32_t c, std::size_t x) {
    const std::int32_t d = new_row();
    at(c, x) = d;
    at(d, inv_[x]) = c;
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) {
      const auto next = parent_[k];
      parent_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
    --live_;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int32_t e = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t f = at(e, x);
        if (f < 0) continue;
        if (at(f, inv_[x]) == e) at(f, inv_[x]) = CosetTable::undefined;
        const std::int32_t e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x));
        } else if (at(f1, inv_[x]) >= 0) {
          merge(e1, at(f1, inv_[x]));
        } else {
          at(e1, x) = f1;
          at(f1, inv_[x]) = e1;
        }
      }
    }
    queue_.clear();
  }

  /// Returns false when a definition would be needed and `fill` is off.
  bool scan(std::int32_t c, const Presentation::Word& w, bool fill) {
    if (w.empty()) return true;
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && at(b, inv_[w[j]]) >= 0) b = at(b, inv_[w[j--]]);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv_[w[i]]) = f;
        return true;
      }
      if (!fill) return false;
      define(f, w[i]);
    }
  }

  void scan_and_fill(std::int32_t c, const Presentation::Word& w) { scan(c, w, true); }

  /// Keeps at least `headroom_` free rows and live slots; `c` is remapped
  /// across compaction.
  void ensure_room(std::size_t& c) {
    auto fits = [&] { return rows() + headroom_ <= caps_.max_rows && live_ + headroom_ <= caps_.max_cosets; };
    if (fits()) return;
    compact(c);
    if (live_ + headroom_ <= caps_.max_cosets && rows() + headroom_ <= caps_.max_rows) return;
    lookahead();
    compact(c);
    if (!fits())
      throw InconclusiveError("coset enumeration exceeded the cap of " + std::to_string(caps_.max_cosets) +
                              " cosets");
  }

  void lookahead() {
    ++lookaheads_;
    for (std::size_t e = 0; e < rows(); ++e)
      for (const auto& r : p_.relators) {
        if (!alive(e)) break;
        scan(static_cast<std::int32_t>(e), r, false);
      }
  }

  /// Drops dead rows, keeping the order of live ones.
  void compact(std::size_t& c) {
    const std::size_t old_rows = rows();
    std::vector<std::int32_t> remap(old_rows, -1);
    std::int32_t next = 0;
    std::size_t new_c = old_rows;
    for (std::size_t e = 0; e < rows(); ++e) {
      if (e >= c && new_c == old_rows && alive(e)) new_c = static_cast<std::size_t>(next);
      if (alive(e)) remap[e] = next++;
    }
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * cols_, CosetTable::undefined);
    for (std::size_t e = 0; e < rows(); ++e) {
      if (!alive(e)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t t = at(e, x);
        if (t >= 0) table[static_cast<std::size_t>(remap[e]) * cols_ + x] = remap[rep(t)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::int32_t e = 0; e < next; ++e) parent_[e] = e;
    c = new_c == old_rows ? static_cast<std::size_t>(next) : new_c;
  }

  CosetTable standardize() {
    std::size_t dummy = 0;
    compact(dummy);
    const std::size_t n = rows();
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t x = 0; x < cols_; ++x)
        if (at(e, x) < 0) throw Error("coset enumeration finished with an incomplete table");
    std::vector<std::int32_t> order, remap(n, -1);
    order.reserve(n);
    order.push_back(0);
    remap[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::int32_t t = at(order[k], x);
        if (remap[t] < 0) {
          remap[t] = static_cast<std::int32_t>(order.size());
          order.push_back(t);
        }
      }
    std::vector<std::int32_t> data(n * cols_);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < cols_; ++x) data[k * cols_ + x] = remap[at(order[k], x)];
    return CosetTable(cols_, n, std::move(data));
  }
};

std::uint64_t cache_key(const Presentation& p, const std::vector<Presentation::Word>& subgroup,
                        const EnumerationCaps& caps) {
  std::uint64_t h = p.digest();
  fnv_u64(h, subgroup.size());
  for (const auto& w : subgroup) {
    fnv_u64(h, w.size());
    for (auto x : w) fnv_u64(h, x);
  }
  fnv_u64(h, caps.max_cosets);
  return h;
}

constexpr char cache_magic[8] = {'S', 'T', 'C', 'T', 'B', 'L', '0', '1'};

std::optional<std::filesystem::path> cache_path(std::uint64_t key) {
  const char* dir = std::getenv("STEINBERG_CACHE");
  if (!dir || !*dir) return std::nullopt;
  char name[40];
  std::snprintf(name, sizeof name, "tc-%016llx.bin", static_cast<unsigned long long>(key));
  return std::filesystem::path(dir) / name;
}

std::optional<CosetTable> load_cached(const std::filesystem::path& path, const Presentation& p) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  std::uint64_t cols = 0, n = 0;
  in.read(magic, 8);
  in.read(reinterpret_cast<char*>(&cols), sizeof cols);
  in.read(reinterpret_cast<char*>(&n), sizeof n);
  if (!in || std::memcmp(magic, cache_magic, 8) != 0 || cols != p.columns()) return std::nullopt;
  std::vector<std::int32_t> data(cols * n);
  in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(data.size() * sizeof(std::int32_t)));
  if (!in) return std::nullopt;
  CosetTable t(cols, n, std::move(data));
  if (t.verify(p)) return std::nullopt;
  return t;
}

void store_cached(const std::filesystem::path& path, const CosetTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    const std::uint64_t cols = t.columns(), n = t.size();
    out.write(cache_magic, 8);
    out.write(reinterpret_cast<const char*>(&cols), sizeof cols);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(t.data().data()),
              static_cast<std::streamsize>(t.data().size() * sizeof(std::int32_t)));
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Presentation::Word>& subgroup,
                        const EnumerationCaps& caps, EnumerationStats* stats) {
  p.validate();
  for (const auto& w : subgroup)
    for (auto x : w)
      if (x >= p.columns()) throw SpecError("subgroup word references unindexed letter " + std::to_string(x));
  if (p.columns() == 0) return CosetTable(0, 1, {});

  const auto path = cache_path(cache_key(p, subgroup, caps));
  if (path) {
    if (auto t = load_cached(*path, p)) {
      if (stats) stats->from_cache = true;
      return *t;
    }
  }
  Enumerator e(p, caps);
  CosetTable t = e.run(subgroup, stats);
  if (path) store_cached(*path, t);
  return t;
}

}  // namespace steinberg
