#include "constel/hankel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "constel/errors.hpp"

namespace constel {

QR qr(int k, int p) {
  if (p < 2) throw std::invalid_argument("qr: p must be at least 2");
  if (k < 0) throw std::invalid_argument("qr: k must be >= 0");
  return {k / (p - 1), k % (p - 1)};
}

void HankelSpec::validate() const {
  if (p < 2) throw std::invalid_argument("HankelSpec: p must be at least 2");
  if (m < 0 || m > p - 1) throw std::invalid_argument("HankelSpec: m must lie in [0, p-1]");
  if (n < -1) throw std::invalid_argument("HankelSpec: n must be >= -1");
}

std::string HankelSpec::label() const {
  return "(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
}

const MultiPoly& FTable::operator()(int n, int r) {
  auto key = std::make_pair(n, r);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, f_poly(p_, n, r)).first;
  return it->second;
}

PolyMatrix hankel_matrix(const HankelSpec& spec, FTable& table) {
  spec.validate();
  if (spec.n < 0) throw std::invalid_argument("hankel_matrix: n must be >= 0");
  if (table.p() != spec.p) throw std::invalid_argument("hankel_matrix: table built for another p");
  const auto size = static_cast<std::size_t>(spec.n + 1);
  PolyMatrix out(size, size);
  for (int i = 0; i <= spec.n; ++i) {
    const QR d = qr(i + spec.m, spec.p);
    for (int j = 0; j <= spec.n; ++j) out(i, j) = table(d.q + j, d.r);
  }
  return out;
}

PolyMatrix hankel_matrix(const HankelSpec& spec) {
  FTable table(spec.p);
  return hankel_matrix(spec, table);
}

MultiPoly hankel_det(const HankelSpec& spec, FTable& table) {
  spec.validate();
  if (spec.n == -1) return MultiPoly(1);
  return det_division_free(hankel_matrix(spec, table));
}

MultiPoly hankel_det(const HankelSpec& spec) {
  FTable table(spec.p);
  return hankel_det(spec, table);
}

MultiPoly hankel_monomial(const HankelSpec& spec) {
  spec.validate();
  std::vector<Factor> factors;
  for (int i = 0; i <= spec.n; ++i)
    for (int j = 1; j <= i * spec.p + spec.m; ++j) factors.push_back({Var::v(static_cast<std::uint32_t>(j)), 1});
  return MultiPoly(Monomial(std::move(factors)));
}

void verify_hankel(const HankelSpec& spec, FTable& table) {
  MultiPoly det = hankel_det(spec, table);
  MultiPoly expected = hankel_monomial(spec);
  if (det != expected)
    throw IdentityViolation("H" + spec.label() + " = " + to_string(det) + ", expected " + to_string(expected));
}

MultiPoly recover_vi(int p, int i, FTable& table) {
  if (p < 2) throw std::invalid_argument("recover_vi: p must be at least 2");
  if (i < 1) throw std::invalid_argument("recover_vi: i must be >= 1");
  const int n = i / p;
  const int m = i % p;
  auto H = [&](int mm, int nn) { return hankel_det({p, mm, nn}, table); };

  MultiPoly numer;
  MultiPoly denom;
  if (m >= 1) {
    numer = H(m, n) * H(m - 1, n - 1);
    denom = H(m, n - 1) * H(m - 1, n);
  } else {
    // i >= 1 forces n >= 1, so n - 2 >= -1.
    numer = H(0, n) * H(p - 1, n - 2);
    denom = H(0, n - 1) * H(p - 1, n - 1);
  }
  try {
    return exact_div(numer, denom);
  } catch (const NotDivisible& e) {
    throw IdentityViolation("recover_vi(p=" + std::to_string(p) + ", i=" + std::to_string(i) + "): " + e.what());
  }
}

MultiPoly recover_vi(int p, int i) {
  FTable table(p);
  return recover_vi(p, i, table);
}

LatticePoint lgv_source(int p, int k) {
  const QR d = qr(k, p);
  return {-p * d.q - d.r, d.r};
}

LatticePoint lgv_sink(int p, int j) { return {j * p, 0}; }

LGVGraph lgv_graph(const HankelSpec& spec) {
  spec.validate();
  LGVGraph g;
  g.p = spec.p;
  for (int i = 0; i <= spec.n; ++i) {
    g.sources.push_back(lgv_source(spec.p, spec.m + i));
    g.sinks.push_back(lgv_sink(spec.p, i));
  }
  return g;
}

MultiPoly lgv_signed_sum(const HankelSpec& spec) {
  const LGVGraph g = lgv_graph(spec);
  const std::size_t size = g.sources.size();
  if (size == 0) return MultiPoly(1);

  std::vector<std::vector<MultiPoly>> sums(size, std::vector<MultiPoly>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (const PPath& path : enumerate_paths(g.p, g.sources[i], g.sinks[j])) sums[i][j] += path_weight(path);

  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a + 1; b < size; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MultiPoly term(inversions % 2 == 0 ? 1 : -1);
    for (std::size_t i = 0; i < size && !term.is_zero(); ++i) term *= sums[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

NilpResult nilp_unique(const HankelSpec& spec) {
  const LGVGraph g = lgv_graph(spec);
  NilpResult result;
  result.weight = MultiPoly();
  std::set<LatticePoint> used;
  std::vector<PPath> chosen;
  std::vector<PPath> witness;

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == g.sources.size()) {
      ++result.count;
      MultiPoly w(1);
      for (const PPath& path : chosen) w *= path_weight(path);
      result.weight += w;
      if (result.count == 1) witness = chosen;
      return;
    }
    if (used.contains(g.sources[i])) return;
    for_each_path(
        g.p, g.sources[i], g.sinks[i], [&](LatticePoint pt) { return !used.contains(pt); },
        [&](const PPath& path) {
          const auto vertices = path.vertices();
          used.insert(vertices.begin(), vertices.end());
          chosen.push_back(path);
          place(i + 1);
          chosen.pop_back();
          for (const LatticePoint& pt : vertices) used.erase(pt);
        });
  };
  place(0);

  if (result.count != 1)
    throw NonUniqueNILP("nilp_unique" + spec.label() + ": found " + std::to_string(result.count) +
                        " non-intersecting configurations");
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const LatticePoint corner{-spec.m, spec.m + static_cast<int>(i) * spec.p};
    const auto vertices = witness[i].vertices();
    if (std::find(vertices.begin(), vertices.end(), corner) == vertices.end())
      throw IdentityViolation("nilp_unique" + spec.label() + ": path " + std::to_string(i) +
                              " misses the corner point");
  }
  return result;
}

}  // namespace constel
