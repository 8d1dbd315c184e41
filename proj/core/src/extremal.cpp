#include "emptytri/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>

#include "emptytri/errors.hpp"

namespace emptytri {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool verify_ap_free(std::uint64_t p, const std::vector<std::uint64_t>& set) {
  const std::set<std::uint64_t> members(set.begin(), set.end());
  for (auto a : members) {
    for (auto c : members) {
      if (c <= a) continue;
      // a + c = 2b has exactly one solution b mod an odd p.
      for (auto b : members) {
        if (b != a && b != c && (a + c) % p == (2 * b) % p) return false;
      }
    }
  }
  return true;
}

BehrendSpec::BehrendSpec(std::uint64_t p, std::vector<std::uint64_t> residues)
    : p_(p), residues_(std::move(residues)) {
  if (p_ < 3 || !is_prime(p_)) throw InputError("Behrend graph needs an odd prime, got " + std::to_string(p_));
  std::sort(residues_.begin(), residues_.end());
  if (std::adjacent_find(residues_.begin(), residues_.end()) != residues_.end()) {
    throw InputError("Behrend set has repeated residues");
  }
  for (auto a : residues_) {
    if (a >= p_) throw InputError("residue " + std::to_string(a) + " not in [0, p)");
  }
  if (!verify_ap_free(p_, residues_)) {
    throw InputError("Behrend set contains a 3-term arithmetic progression mod " + std::to_string(p_));
  }
}

BehrendSpec greedy_ap_free(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InputError("greedy_ap_free needs an odd prime");
  std::vector<std::uint64_t> kept;
  for (std::uint64_t r = 0; r < p; ++r) {
    kept.push_back(r);
    if (!verify_ap_free(p, kept)) kept.pop_back();
  }
  return BehrendSpec(p, std::move(kept));
}

Graph build_behrend_graph(const BehrendSpec& spec) {
  const auto p = spec.p();
  Graph g(3 * p);
  const auto X = [](std::uint64_t z) { return static_cast<Vertex>(z); };
  const auto Y = [p](std::uint64_t z) { return static_cast<Vertex>(p + z % p); };
  const auto Z = [p](std::uint64_t z) { return static_cast<Vertex>(2 * p + z % p); };
  for (std::uint64_t z = 0; z < p; ++z) {
    for (auto a : spec.residues()) {
      const Vertex x = X(z), y = Y(z + a), w = Z(z + 2 * a);
      if (!g.add_edge(x, y) || !g.add_edge(y, w) || !g.add_edge(x, w)) {
        throw InvariantError("Behrend construction produced a repeated edge");
      }
    }
  }
  return g;
}

UniqueTriangleReport verify_unique_triangle(const Graph& g) {
  UniqueTriangleReport report;
  report.multiplicity = edge_triangle_multiplicity(g);
  report.unique = std::all_of(report.multiplicity.begin(), report.multiplicity.end(),
                              [](const auto& kv) { return kv.second == 1; });
  report.kite_free = std::all_of(report.multiplicity.begin(), report.multiplicity.end(),
                                 [](const auto& kv) { return kv.second <= 1; });
  return report;
}

namespace {

class KiteFreeSearch {
 public:
  explicit KiteFreeSearch(std::uint32_t n) : n_(n) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = a + 1; b < n; ++b)
        for (std::uint32_t c = b + 1; c < n; ++c) triangles_.push_back({a, b, c});
  }

  ExtremalRecord run() {
    search(0, 0);
    ExtremalRecord record{n_, best_.size(), Graph(n_)};
    for (const auto& [a, b, c] : best_) {
      record.witness.add_edge(a, b);
      record.witness.add_edge(b, c);
      record.witness.add_edge(a, c);
    }
    return record;
  }

 private:
  using Mask = std::uint32_t;
  static constexpr Mask bit(std::uint32_t v) { return Mask{1} << v; }

  // Triangles later in lexicographic order can only add degree to vertices
  // >= first; each such vertex joins at most (n - 1 - deg) / 2 more.
  std::uint64_t bound(std::uint32_t first) const {
    std::uint64_t slots = 0;
    for (std::uint32_t v = first; v < n_; ++v) {
      slots += (n_ - 1 - static_cast<std::uint32_t>(std::popcount(adj_[v]))) / 2;
    }
    return slots / 3;
  }

  bool admissible(const std::array<std::uint32_t, 3>& t) const {
    const auto [a, b, c] = t;
    if ((adj_[a] & (bit(b) | bit(c))) || (adj_[b] & bit(c))) return false;
    const Mask na = adj_[a] | bit(b) | bit(c);
    const Mask nb = adj_[b] | bit(a) | bit(c);
    const Mask nc = adj_[c] | bit(a) | bit(b);
    // Each new edge must close exactly the triangle being added.
    if ((na & nb) != bit(c) || (nb & nc) != bit(a) || (na & nc) != bit(b)) return false;
    // Unused labels are interchangeable: only the lowest may be introduced.
    std::uint32_t next = used_;
    for (auto v : t) {
      if (v >= used_) {
        if (v != next) return false;
        ++next;
      }
    }
    return true;
  }

  void search(std::size_t start, std::uint32_t depth) {
    if (depth > best_.size()) best_ = chosen_;
    for (std::size_t idx = start; idx < triangles_.size(); ++idx) {
      const auto& t = triangles_[idx];
      if (depth + bound(t[0]) <= best_.size()) return;
      if (!admissible(t)) continue;
      const auto [a, b, c] = t;
      const std::uint32_t saved_used = used_;
      adj_[a] |= bit(b) | bit(c);
      adj_[b] |= bit(a) | bit(c);
      adj_[c] |= bit(a) | bit(b);
      used_ = std::max(used_, c + 1);
      chosen_.push_back(t);
      search(idx + 1, depth + 1);
      chosen_.pop_back();
      used_ = saved_used;
      adj_[a] &= ~(bit(b) | bit(c));
      adj_[b] &= ~(bit(a) | bit(c));
      adj_[c] &= ~(bit(a) | bit(b));
    }
  }

  std::uint32_t n_;
  std::vector<std::array<std::uint32_t, 3>> triangles_;
  std::array<Mask, 32> adj_{};
  std::uint32_t used_ = 0;
  std::vector<std::array<std::uint32_t, 3>> chosen_;
  std::vector<std::array<std::uint32_t, 3>> best_;
};

}  // namespace

ExtremalRecord max_triangles_kite_free(std::uint32_t n) {
  if (n > kMaxExhaustiveVertices) {
    throw ResourceError("exhaustive kite-free search supports n <= " +
                        std::to_string(kMaxExhaustiveVertices) + ", got " + std::to_string(n));
  }
  if (n < 3) return ExtremalRecord{n, 0, Graph(n)};
  return KiteFreeSearch(n).run();
}

}  // namespace emptytri
