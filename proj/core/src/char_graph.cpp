#include "groupdepth/char_graph.hpp"

#include <algorithm>
#include <deque>

namespace groupdepth {

InducedCharacterGraph build_character_graph(const InclusionMatrix &m) {
  const std::size_t r = m.rows(), s = m.cols();
  InducedCharacterGraph g;
  g.n = r;
  g.gram.assign(r, std::vector<std::uint64_t>(r, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < s; ++j)
        sum += m.m[a][j] * m.m[b][j];
      g.gram[a][b] = g.gram[b][a] = sum;
    }
  for (std::size_t a = 0; a < r; ++a)
    if (g.gram[a][a] == 0)
      throw InternalError("diagonal of M M^T must be positive for an irredundant matrix");

  g.adjacency.assign(r, std::vector<char>(r, 0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      g.adjacency[a][b] = a != b && g.gram[a][b] != 0;

  g.distance.assign(r, std::vector<int>(r, -1));
  for (std::size_t src = 0; src < r; ++src) {
    auto &dist = g.distance[src];
    dist[src] = 0;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < r; ++w)
        if (g.adjacency[v][w] && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
  }

  g.connected = true;
  g.diameter = 0;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (g.distance[a][b] < 0)
        g.connected = false;
      else
        g.diameter = std::max(g.diameter, static_cast<unsigned>(g.distance[a][b]));
    }
  return g;
}

unsigned max_distance_to_constituents(const InducedCharacterGraph &graph,
                                      const InclusionMatrix &m, std::size_t chi) {
  if (!graph.connected)
    throw std::invalid_argument("constituent distances need a connected graph");
  std::vector<std::size_t> lambda;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m.m[i][chi] != 0)
      lambda.push_back(i);
  if (lambda.empty())
    throw InternalError("a column of an irredundant matrix has no constituents");

  unsigned worst = 0;
  for (std::size_t a = 0; a < graph.n; ++a) {
    int best = -1;
    for (std::size_t b : lambda) {
      int d = graph.distance[a][b];
      if (best < 0 || d < best)
        best = d;
    }
    worst = std::max(worst, static_cast<unsigned>(best));
  }
  return worst;
}

GraphDepthEstimate depth_interval(const InducedCharacterGraph &graph,
                                  const InclusionMatrix &m) {
  if (!graph.connected)
    throw std::invalid_argument("the interval estimate needs a connected graph");
  GraphDepthEstimate est;
  est.diameter = graph.diameter;
  est.ell = 0;
  for (std::size_t chi = 0; chi < m.cols(); ++chi)
    est.ell = std::max(est.ell, max_distance_to_constituents(graph, m, chi));

  for (unsigned d : {2 * est.diameter, 2 * est.diameter + 1})
    if (d == 2 * est.ell + 1 || d == 2 * est.ell + 2)
      est.candidates.push_back(d);
  if (est.candidates.empty())
    throw InternalError("graph depth windows do not intersect");
  return est;
}

std::optional<std::pair<unsigned, unsigned>> depth5_witness(const InclusionMatrix &m) {
  const std::size_t r = m.rows(), s = m.cols();
  for (std::size_t chi = 0; chi < s; ++chi) {
    // restriction of chi is irreducible iff its column is a single 1
    std::size_t nonzero = 0, row = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (m.m[i][chi] != 0) {
        ++nonzero;
        row = i;
      }
    if (nonzero != 1 || m.m[row][chi] != 1)
      continue;
    for (std::size_t a = 0; a < r; ++a) {
      std::uint64_t ip = 0;
      for (std::size_t j = 0; j < s; ++j)
        ip += m.m[a][j] * m.m[row][j];
      if (ip == 0)
        return std::make_pair(static_cast<unsigned>(a), static_cast<unsigned>(chi));
    }
  }
  return std::nullopt;
}

} // namespace groupdepth
