#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "emptytri/graph.hpp"

namespace emptytri {

bool is_prime(std::uint64_t p);

/// True iff no three distinct residues a, b, c of `set` satisfy
/// a + c = 2b (mod p). Residues must lie in [0, p).
bool verify_ap_free(std::uint64_t p, const std::vector<std::uint64_t>& set);

/// Parameters of a Behrend graph: an odd prime p and a 3-AP-free subset of
/// Z/pZ. Construction validates; throws InputError otherwise.
class BehrendSpec {
 public:
  BehrendSpec(std::uint64_t p, std::vector<std::uint64_t> residues);

  std::uint64_t p() const noexcept { return p_; }
  const std::vector<std::uint64_t>& residues() const noexcept { return residues_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> residues_;  // sorted, distinct
};

/// Scans 0, 1, ..., p-1 and keeps each residue that closes no 3-AP mod p
/// with those already kept.
BehrendSpec greedy_ap_free(std::uint64_t p);

/// Tripartite graph on X = [0, p), Y = [p, 2p), Z = [2p, 3p) with the
/// triangle (X_z, Y_{z+a}, Z_{z+2a}) for every z in Z/pZ and a in the set.
Graph build_behrend_graph(const BehrendSpec& spec);

struct UniqueTriangleReport {
  std::map<Edge, std::uint32_t> multiplicity;
  bool unique = false;     // every edge in exactly one triangle
  bool kite_free = false;  // every edge in at most one triangle
};

UniqueTriangleReport verify_unique_triangle(const Graph& g);

/// Largest n for which max_triangles_kite_free runs its exhaustive search.
inline constexpr std::uint32_t kMaxExhaustiveVertices = 15;

struct ExtremalRecord {
  std::uint32_t n = 0;
  std::uint64_t h = 0;
  Graph witness;
};

/// Maximum number of triangles in a kite-free graph on n vertices, with a
/// witness. Defined as 0 for n < 3.
///
/// A kite-free graph's triangles are pairwise edge-disjoint and its edges
/// close no further triangle, so the search runs over triangle sets in
/// lexicographic order subject to both constraints. Symmetry is broken by
/// letting each chosen triangle touch only the lowest unused vertex labels.
/// The witness is the first optimum in that order; deterministic. Throws
/// ResourceError for n > kMaxExhaustiveVertices.
ExtremalRecord max_triangles_kite_free(std::uint32_t n);

}  // namespace emptytri
