#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "constel/matrix.hpp"
#include "constel/multipoly.hpp"
#include "constel/paths.hpp"

namespace constel {

struct QR {
  int q = 0;
  int r = 0;

  bool operator==(const QR&) const = default;
};

/// Euclidean division of k by p-1.
QR qr(int k, int p);

/// Indexing data of the generalized Hankel determinant H_p^{m,n}:
/// the (n+1)x(n+1) matrix with entries F_{q_{i+m}+j}^{(r_{i+m})}.
/// n = -1 denotes the empty determinant.
struct HankelSpec {
  int p = 2;
  int m = 0;
  int n = 0;

  /// Throws std::invalid_argument unless p >= 2, 0 <= m <= p-1, n >= -1.
  void validate() const;
  std::string label() const;
};

/// Memo of F_n^{(r)} for one p; shared by the determinant routines so that
/// each polynomial is built once. Not thread-safe.
class FTable {
 public:
  explicit FTable(int p) : p_(p) {}
  int p() const { return p_; }
  const MultiPoly& operator()(int n, int r);

 private:
  int p_;
  std::map<std::pair<int, int>, MultiPoly> cache_;
};

PolyMatrix hankel_matrix(const HankelSpec& spec, FTable& table);
PolyMatrix hankel_matrix(const HankelSpec& spec);

MultiPoly hankel_det(const HankelSpec& spec, FTable& table);
MultiPoly hankel_det(const HankelSpec& spec);

/// prod_{i=0}^{n} prod_{j=1}^{ip+m} V_j, the closed form of H_p^{m,n}.
MultiPoly hankel_monomial(const HankelSpec& spec);

/// Throws IdentityViolation when hankel_det(spec) differs from
/// hankel_monomial(spec).
void verify_hankel(const HankelSpec& spec, FTable& table);

/// V_i recovered from ratios of determinants H_p^{m,n} with i = pn + m.
/// Only F-data enters; a failed exact division is an IdentityViolation.
MultiPoly recover_vi(int p, int i, FTable& table);
MultiPoly recover_vi(int p, int i);

/// Sources A_k and sinks B_j of the path system behind H_p^{m,n}.
struct LGVGraph {
  int p = 2;
  std::vector<LatticePoint> sources;  // A_m, ..., A_{m+n}
  std::vector<LatticePoint> sinks;    // B_0, ..., B_n
};

LatticePoint lgv_source(int p, int k);
LatticePoint lgv_sink(int p, int j);
LGVGraph lgv_graph(const HankelSpec& spec);

/// sum over permutations s of sign(s) * prod_i W(A_{m+i} -> B_{s(i)}), with
/// every W obtained by enumerating the individual paths.
MultiPoly lgv_signed_sum(const HankelSpec& spec);

struct NilpResult {
  std::size_t count = 0;
  MultiPoly weight;
};

/// Enumerates the vertex-disjoint path systems A_{m+i} -> B_i.
/// Throws NonUniqueNILP unless exactly one exists, and IdentityViolation when
/// path i of that system misses (-m, m+ip).
NilpResult nilp_unique(const HankelSpec& spec);

}  // namespace constel
