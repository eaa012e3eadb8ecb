#include "avgproc/graph.hpp"

#include <cmath>

#include "avgproc/errors.hpp"

namespace avgproc {

namespace {
constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 26;
constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 30;
}  // namespace

Graph Graph::hypercube(int d) {
  if (d < 1 || d > 30) throw ParameterError("hypercube dimension must be in [1, 30]");
  const std::uint64_t n = std::uint64_t{1} << d;
  return Graph(Family::Hypercube, n, static_cast<std::uint64_t>(d) * (n / 2), d, 0);
}

Graph Graph::complete_bipartite(std::uint64_t m, std::uint64_t k) {
  if (m < 1 || k < 1) throw ParameterError("bipartite part sizes must be >= 1");
  if (m > k) throw ParameterError("complete_bipartite requires m <= k");
  if (m + k > kMaxVertices) throw ParameterError("graph exceeds 2^30 vertices");
  return Graph(Family::CompleteBipartite, m + k, m * k, 0, m);
}

Graph Graph::complete(std::uint64_t n) {
  if (n < 2) throw ParameterError("complete graph needs n >= 2");
  if (n > kMaxVertices) throw ParameterError("graph exceeds 2^30 vertices");
  return Graph(Family::Complete, n, n * (n - 1) / 2, 0, 0);
}

Edge Graph::edge(std::uint64_t i) const {
  switch (family_) {
    case Family::Hypercube: {
      const std::uint64_t half = n_ / 2;
      const auto bit = static_cast<unsigned>(i / half);
      const std::uint64_t r = i % half;
      const std::uint64_t low = r & ((std::uint64_t{1} << bit) - 1);
      const std::uint64_t x = ((r >> bit) << (bit + 1)) | low;
      return {static_cast<Vertex>(x), static_cast<Vertex>(x | (std::uint64_t{1} << bit))};
    }
    case Family::CompleteBipartite: {
      const std::uint64_t k = n_ - m_;
      return {static_cast<Vertex>(i / k), static_cast<Vertex>(m_ + i % k)};
    }
    case Family::Complete: {
      // Edges ordered by larger endpoint y; edge i = (x, y) with i = y(y-1)/2 + x.
      auto y = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0);
      while (y * (y - 1) / 2 > i) --y;
      while ((y + 1) * y / 2 <= i) ++y;
      return {static_cast<Vertex>(i - y * (y - 1) / 2), static_cast<Vertex>(y)};
    }
  }
  throw CapabilityError("unknown graph family");
}

std::vector<Edge> Graph::edges() const {
  if (edge_count_ > kMaxMaterialized) throw CapabilityError("too many edges to materialize");
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::uint64_t i = 0; i < edge_count_; ++i) out.push_back(edge(i));
  return out;
}

std::uint64_t Graph::degree(Vertex x) const {
  if (x >= n_) throw ParameterError("vertex out of range");
  switch (family_) {
    case Family::Hypercube: return static_cast<std::uint64_t>(d_);
    case Family::CompleteBipartite: return x < m_ ? n_ - m_ : m_;
    case Family::Complete: return n_ - 1;
  }
  throw CapabilityError("unknown graph family");
}

Vertex Graph::neighbor(Vertex x, std::uint64_t j) const {
  if (j >= degree(x)) throw ParameterError("neighbour index out of range");
  switch (family_) {
    case Family::Hypercube: return x ^ (Vertex{1} << j);
    case Family::CompleteBipartite:
      return x < m_ ? static_cast<Vertex>(m_ + j) : static_cast<Vertex>(j);
    case Family::Complete: return static_cast<Vertex>(j < x ? j : j + 1);
  }
  throw CapabilityError("unknown graph family");
}

bool Graph::adjacent(Vertex x, Vertex y) const {
  if (x >= n_ || y >= n_) throw ParameterError("vertex out of range");
  if (x == y) return false;
  switch (family_) {
    case Family::Hypercube: {
      const Vertex diff = x ^ y;
      return (diff & (diff - 1)) == 0;
    }
    case Family::CompleteBipartite: return (x < m_) != (y < m_);
    case Family::Complete: return true;
  }
  return false;
}

Part Graph::part_of(Vertex x) const {
  if (family_ != Family::CompleteBipartite) throw CapabilityError("part_of needs a bipartite graph");
  if (x >= n_) throw ParameterError("vertex out of range");
  return x < m_ ? Part::C1 : Part::C2;
}

std::string Graph::family_name() const {
  switch (family_) {
    case Family::Hypercube: return "hypercube";
    case Family::CompleteBipartite: return "k_bipartite";
    case Family::Complete: return "complete";
  }
  return "unknown";
}

DegreeStats degree_stats(const Graph& g) {
  if (g.n() > kMaxMaterialized) throw CapabilityError("degree list capped at 2^26 vertices");
  DegreeStats s;
  s.degrees.resize(g.n());
  for (std::uint64_t x = 0; x < g.n(); ++x) s.degrees[x] = g.degree(static_cast<Vertex>(x));
  s.mean = mean_degree(g);
  return s;
}

double mean_degree(const Graph& g) {
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.n());
}

double relaxation_time(const Graph& g) {
  switch (g.family()) {
    case Family::Hypercube: return 1.0;
    case Family::CompleteBipartite:
      // K_{1,1} is a single edge: the only nonzero eigenvalue is (m+k)/2 = 1.
      if (g.n() == 2) return 1.0;
      return 2.0 / static_cast<double>(g.m());
    case Family::Complete: return 2.0 / static_cast<double>(g.n());
  }
  throw CapabilityError("relaxation_time: unsupported family");
}

}  // namespace avgproc
