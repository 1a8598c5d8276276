#include "steinberg/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "steinberg/error.hpp"

namespace steinberg {

namespace {

using IntMatrix = std::vector<long>;

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
  IntMatrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i * n + k])
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
  return c;
}

// E-type Cartan matrices in Bourbaki labelling: chain 1-3-4-5-6-7-8, node 2 on 4.
std::vector<int> e_cartan(int rank) {
  const auto r = static_cast<std::size_t>(rank);
  std::vector<int> c(r * r, 0);
  auto link = [&](std::size_t a, std::size_t b) {
    c[(a - 1) * r + (b - 1)] = -1;
    c[(b - 1) * r + (a - 1)] = -1;
  };
  for (std::size_t i = 0; i < r; ++i) c[i * r + i] = 2;
  link(1, 3);
  link(3, 4);
  link(2, 4);
  for (std::size_t k = 4; k < r; ++k) link(k, k + 1);
  return c;
}

// Rank of a small integer matrix by fraction-free elimination.
int int_rank(std::vector<std::vector<long>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto p = rows[rank];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const long f = rows[r][c];
      if (f == 0) continue;
      long g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = rows[r][k] * p[c] - p[k] * f;
        g = std::gcd(g, rows[r][k] < 0 ? -rows[r][k] : rows[r][k]);
      }
      if (g > 1)
        for (long& x : rows[r]) x /= g;
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Lexicographic positivity: first nonzero coordinate is positive.
bool lex_positive(const Root& r) {
  for (int x : r)
    if (x != 0) return x > 0;
  return false;
}

Root add_roots(const Root& a, const Root& b) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Root negate(const Root& a) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

}  // namespace

std::string RootDatum::name() const {
  const char f = family_ == Family::A ? 'A' : family_ == Family::D ? 'D' : 'E';
  return std::string(1, f) + std::to_string(rank_);
}

std::optional<std::size_t> RootDatum::find(const Root& r) const {
  auto it = lookup_.find(r);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootDatum::index(const Root& r) const {
  auto i = find(r);
  if (!i) throw DomainError("vector is not a root of " + name());
  return *i;
}

std::optional<std::size_t> RootDatum::sum(std::size_t i, std::size_t j) const {
  const long s = sums_[i * roots_.size() + j];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

int RootDatum::structure_constant(std::size_t i, std::size_t j) const {
  auto it = signs_.find({i, j});
  if (it == signs_.end()) throw DomainError("sum of roots is not a root in " + name());
  return it->second;
}

int RootDatum::structure_constant(const Root& a, const Root& b) const {
  return structure_constant(index(a), index(b));
}

std::size_t RootDatum::matrix_size() const {
  switch (family_) {
    case Family::A:
      return static_cast<std::size_t>(rank_ + 1);
    case Family::D:
      return static_cast<std::size_t>(2 * rank_);
    case Family::E:
      break;
  }
  throw UnsupportedError("no matrix realization for " + name());
}

std::size_t RootDatum::a_root(std::size_t i, std::size_t j) const {
  if (family_ != Family::A) throw DomainError("a_root needs type A");
  Root r(dim_, 0);
  r.at(i) = 1;
  r.at(j) = -1;
  return index(r);
}

std::shared_ptr<const RootDatum> RootDatum::build(Family family, int rank) {
  auto d = std::make_shared<RootDatum>();
  d->family_ = family;
  d->rank_ = rank;
  switch (family) {
    case Family::A: {
      if (rank < 1) throw SpecError("A_l needs l >= 1");
      const auto n = static_cast<std::size_t>(rank + 1);
      d->dim_ = n;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == j) continue;
          Root r(n, 0);
          r[i] = 1;
          r[j] = -1;
          d->roots_.push_back(r);
          d->pairs_.emplace_back(i, j);
        }
      d->form_.assign(n * n, 0);
      for (std::size_t i = 0; i < n; ++i) d->form_[i * n + i] = 1;
      break;
    }
    case Family::D: {
      if (rank < 3) throw SpecError("D_l needs l >= 3");
      const auto l = static_cast<std::size_t>(rank);
      d->dim_ = l;
      // Signed coordinate +k -> index k, -k -> 2l-1-k (0-based k).
      auto pos = [](std::size_t k) { return k; };
      auto negi = [l](std::size_t k) { return 2 * l - 1 - k; };
      auto push = [&](std::size_t i, int si, std::size_t j, int sj, std::size_t p, std::size_t q) {
        Root r(l, 0);
        r[i] = si;
        r[j] = sj;
        d->roots_.push_back(r);
        d->pairs_.emplace_back(p, q);
      };
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
          push(i, 1, j, -1, pos(i), pos(j));    // e_i - e_j
          push(i, -1, j, 1, pos(j), pos(i));    // e_j - e_i
          push(i, 1, j, 1, pos(i), negi(j));    // e_i + e_j
          push(i, -1, j, -1, negi(i), pos(j));  // -e_i - e_j
        }
      d->form_.assign(l * l, 0);
      for (std::size_t i = 0; i < l; ++i) d->form_[i * l + i] = 1;
      break;
    }
    case Family::E: {
      if (rank < 6 || rank > 8) throw SpecError("E_l needs l in {6,7,8}");
      const auto l = static_cast<std::size_t>(rank);
      d->dim_ = l;
      d->form_ = e_cartan(rank);
      auto norm = [&](const Root& r) {
        long s = 0;
        for (std::size_t i = 0; i < l; ++i)
          for (std::size_t j = 0; j < l; ++j) s += r[i] * d->form_[i * l + j] * r[j];
        return s;
      };
      // Positive roots: close the simple roots under adding simple roots.
      std::set<Root> positive;
      std::vector<Root> frontier;
      for (std::size_t i = 0; i < l; ++i) {
        Root r(l, 0);
        r[i] = 1;
        positive.insert(r);
        frontier.push_back(r);
      }
      while (!frontier.empty()) {
        std::vector<Root> next;
        for (const auto& r : frontier)
          for (std::size_t i = 0; i < l; ++i) {
            Root s = r;
            s[i] += 1;
            if (norm(s) == 2 && positive.insert(s).second) next.push_back(s);
          }
        frontier = std::move(next);
      }
      std::vector<Root> pos(positive.begin(), positive.end());
      std::stable_sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
      });
      for (const auto& r : pos) d->roots_.push_back(r);
      for (const auto& r : pos) d->roots_.push_back(negate(r));
      break;
    }
  }
  d->finish();
  return d;
}

void RootDatum::finish() {
  const std::size_t N = roots_.size();
  for (std::size_t i = 0; i < N; ++i) lookup_[roots_[i]] = i;
  neg_.resize(N);
  for (std::size_t i = 0; i < N; ++i) neg_[i] = index(negate(roots_[i]));
  gram_.assign(N * N, 0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      int s = 0;
      for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b) s += roots_[i][a] * form_[a * dim_ + b] * roots_[j][b];
      gram_[i * N + j] = s;
    }
  sums_.assign(N * N, -1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (auto k = find(add_roots(roots_[i], roots_[j]))) sums_[i * N + j] = static_cast<long>(*k);

  if (family_ == Family::E) {
    // Bilinear cocycle on simple-root coordinates.
    const std::size_t l = dim_;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        if (sums_[i * N + j] < 0) continue;
        long e = 0;
        for (std::size_t p = 0; p < l; ++p)
          for (std::size_t q = p; q < l; ++q)
            if (form_[p * l + q] != 0) e += static_cast<long>(roots_[i][p]) * roots_[j][q];
        signs_[{i, j}] = (e % 2 == 0) ? 1 : -1;
      }
    return;
  }

  // Read N_{a,b} off [t_a(1), t_b(1)] = t_{a+b}(N) in the integer realization.
  const std::size_t n = matrix_size();
  auto unip = [&](std::size_t k, long x) {
    IntMatrix m = int_identity(n);
    auto [p, q] = pairs_[k];
    m[p * n + q] += x;
    if (family_ == Family::D) m[mirror(q) * n + mirror(p)] -= x;
    return m;
  };
  const IntMatrix one = int_identity(n);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (sums_[i * N + j] < 0) continue;
      const auto k = static_cast<std::size_t>(sums_[i * N + j]);
      IntMatrix c = int_mul(int_mul(unip(i, 1), unip(j, 1), n), int_mul(unip(i, -1), unip(j, -1), n), n);
      if (c == unip(k, 1))
        signs_[{i, j}] = 1;
      else if (c == unip(k, -1))
        signs_[{i, j}] = -1;
      else
        throw Error("matrix realization of " + name() + " is not a Chevalley realization");
    }
}

std::shared_ptr<const RootDatum> RootDatum::parse(std::string_view name) {
  if (name.size() < 2) throw SpecError("malformed root system name '" + std::string(name) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  const std::string digits(name.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SpecError("malformed root system name '" + std::string(name) + "'");
  const int rank = std::stoi(digits);
  switch (f) {
    case 'A':
      if (rank < 2) throw SpecError("A_l needs rank >= 2");
      return build(Family::A, rank);
    case 'D':
      return build(Family::D, rank);
    case 'E':
      return build(Family::E, rank);
    default:
      throw SpecError("root system '" + std::string(name) + "' is not simply laced or unknown");
  }
}

std::vector<SubsystemEmbedding> a3_subsystems(const RootDatum& phi) {
  std::vector<SubsystemEmbedding> out;
  if (phi.rank() < 3) return out;
  const std::size_t N = phi.size();
  auto as_rows = [&](std::initializer_list<std::size_t> idx) {
    std::vector<std::vector<long>> rows;
    for (auto i : idx) rows.emplace_back(phi.root(i).begin(), phi.root(i).end());
    return rows;
  };

  // Standard A3 and its simple-root coordinates.
  const auto a3 = RootDatum::build(Family::A, 3);
  auto simple_coords = [&](std::size_t k) {
    auto [i, j] = a3->matrix_pair(k);
    std::vector<int> c(3, 0);
    const int sign = i < j ? 1 : -1;
    for (std::size_t t = std::min(i, j); t < std::max(i, j); ++t) c[t] = sign;
    return c;
  };

  std::set<std::vector<std::size_t>> seen;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      for (std::size_t c = b + 1; c < N; ++c) {
        if (int_rank(as_rows({a, b, c})) != 3) continue;
        std::vector<std::size_t> members;
        for (std::size_t r = 0; r < N; ++r)
          if (int_rank(as_rows({a, b, c, r})) == 3) members.push_back(r);
        if (members.size() != 12 || !seen.insert(members).second) continue;

        // Simple system from lexicographic positivity.
        std::vector<std::size_t> positive;
        for (auto r : members)
          if (lex_positive(phi.root(r))) positive.push_back(r);
        std::vector<std::size_t> simple;
        for (auto r : positive) {
          bool decomposable = false;
          for (auto s : positive)
            for (auto t : positive)
              if (phi.sum(s, t) == r) decomposable = true;
          if (!decomposable) simple.push_back(r);
        }
        if (simple.size() != 3) throw Error("unexpected subsystem shape in " + phi.name());
        // Order as a chain b0 - b1 - b2.
        std::size_t middle = 3;
        for (std::size_t k = 0; k < 3; ++k) {
          int links = 0;
          for (std::size_t m = 0; m < 3; ++m)
            if (m != k && phi.inner(simple[k], simple[m]) == -1) ++links;
          if (links == 2) middle = k;
        }
        if (middle == 3) continue;  // not of type A3
        std::vector<std::size_t> ends;
        for (std::size_t k = 0; k < 3; ++k)
          if (k != middle) ends.push_back(simple[k]);
        const std::vector<std::size_t> chain{ends[0], simple[middle], ends[1]};

        SubsystemEmbedding emb;
        emb.roots = members;
        for (std::size_t k = 0; k < a3->size(); ++k) {
          const auto coeffs = simple_coords(k);
          Root v(phi.root(0).size(), 0);
          for (std::size_t t = 0; t < 3; ++t)
            for (std::size_t x = 0; x < v.size(); ++x) v[x] += coeffs[t] * phi.root(chain[t])[x];
          emb.embedding.push_back(phi.index(v));
        }
        out.push_back(std::move(emb));
      }
  std::sort(out.begin(), out.end(),
            [](const SubsystemEmbedding& x, const SubsystemEmbedding& y) { return x.roots < y.roots; });
  return out;
}

}  // namespace steinberg
