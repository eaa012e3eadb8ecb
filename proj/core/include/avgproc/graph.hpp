#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace avgproc {

enum class Family { Hypercube, CompleteBipartite, Complete };

enum class Part { C1, C2 };

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// One of the three supported graph families. Edges are enumerated
/// implicitly: edge(i) decodes the i-th edge in O(1), so a d=30 hypercube
/// needs no edge storage.
class Graph {
 public:
  static Graph hypercube(int d);
  static Graph complete_bipartite(std::uint64_t m, std::uint64_t k);
  static Graph complete(std::uint64_t n);

  Family family() const { return family_; }
  std::uint64_t n() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }

  /// Hypercube dimension (0 for other families).
  int dimension() const { return d_; }
  /// Size of C1 for bipartite graphs (0 otherwise).
  std::uint64_t m() const { return m_; }

  /// i-th edge, 0 <= i < edge_count(); endpoints ordered first < second.
  Edge edge(std::uint64_t i) const;
  /// All edges, materialized. Refuses graphs with more than 2^26 edges.
  std::vector<Edge> edges() const;

  std::uint64_t degree(Vertex x) const;
  /// j-th neighbour of x, 0 <= j < degree(x).
  Vertex neighbor(Vertex x, std::uint64_t j) const;
  bool adjacent(Vertex x, Vertex y) const;

  /// Side of a bipartite graph; throws CapabilityError for other families.
  Part part_of(Vertex x) const;

  /// Short family label used in CSV output: hypercube, k_bipartite, complete.
  std::string family_name() const;

 private:
  Graph(Family f, std::uint64_t n, std::uint64_t edges, int d, std::uint64_t m)
      : family_(f), n_(n), edge_count_(edges), d_(d), m_(m) {}

  Family family_;
  std::uint64_t n_;
  std::uint64_t edge_count_;
  int d_;
  std::uint64_t m_;
};

inline Graph hypercube(int d) { return Graph::hypercube(d); }
inline Graph complete_bipartite(std::uint64_t m, std::uint64_t k) {
  return Graph::complete_bipartite(m, k);
}
inline Graph complete_graph(std::uint64_t n) { return Graph::complete(n); }

struct DegreeStats {
  std::vector<std::uint64_t> degrees;
  double mean = 0.0;
};

/// Per-vertex degrees and their mean 2|E|/n. Capped at 2^26 vertices.
DegreeStats degree_stats(const Graph& g);

/// 2|E|/n without materializing the degree list.
double mean_degree(const Graph& g);

/// Inverse spectral gap of the rate-1/2 random walk generator.
double relaxation_time(const Graph& g);

}  // namespace avgproc
