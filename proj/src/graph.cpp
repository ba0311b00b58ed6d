#include "hcopt/graph.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hcopt/rng.hpp"

namespace hcopt {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n));
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int n, std::span<const Edge> edges)
    : n_(n), w_() {
  if (n < 1) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  w_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  std::vector<char> seen(w_.size(), 0);
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (!std::isfinite(e.w)) {
      throw std::invalid_argument("non-finite weight on pair (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    }
    if (e.w < 0.0) {
      throw std::invalid_argument("negative weight on pair (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
    }
    const std::size_t a = index(e.u, e.v);
    if (seen[a] && w_[a] != e.w) {
      throw std::invalid_argument("conflicting symmetric entries for pair (" +
                                  std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    seen[a] = seen[index(e.v, e.u)] = 1;
    w_[a] = w_[index(e.v, e.u)] = e.w;
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double w = w_[index(i, j)];
      total_ += w;
      max_ = std::max(max_, w);
    }
  }
}

double WeightedGraph::degree(int i) const {
  double d = 0.0;
  for (double w : row(i)) {
    d += w;
  }
  return d;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (const double w = weight(i, j); w != 0.0) {
        out.push_back({i, j, w});
      }
    }
  }
  return out;
}

WeightedGraph WeightedGraph::induced(std::span<const int> vertices) const {
  std::vector<Edge> sub;
  const int m = static_cast<int>(vertices.size());
  for (int a = 0; a < m; ++a) {
    check_vertex(n_, vertices[a]);
    for (int b = a + 1; b < m; ++b) {
      if (const double w = weight(vertices[a], vertices[b]); w != 0.0) {
        sub.push_back({a, b, w});
      }
    }
  }
  return WeightedGraph(m, sub);
}

WeightedGraph make_tight_similarity_instance(int k, double eps) {
  if (k < 2) {
    throw std::invalid_argument("tight similarity instance needs k >= 2");
  }
  if (!(eps > 0.0)) {
    throw std::invalid_argument("tight similarity instance needs eps > 0");
  }
  const int block = k * k;
  const int n = k * block;
  std::vector<Edge> edges;
  for (int v = 0; v < k; ++v) {
    for (int p = 0; p < block; ++p) {
      for (int q = p + 1; q < block; ++q) {
        edges.push_back({v * block + p, v * block + q, 1.0});
      }
    }
  }
  for (int p = 0; p < block; ++p) {
    for (int v = 0; v < k; ++v) {
      for (int u = v + 1; u < k; ++u) {
        edges.push_back({v * block + p, u * block + p, 1.0 + eps});
      }
    }
  }
  return WeightedGraph(n, edges);
}

WeightedGraph make_tight_dissimilarity_instance(int m, double same_side_weight) {
  if (m < 2) {
    throw std::invalid_argument("tight dissimilarity instance needs m >= 2");
  }
  if (same_side_weight < 0.0) {
    throw std::invalid_argument("same-side weight must be nonnegative");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) {
        edges.push_back({i, m + j, 1.0});
      }
    }
  }
  if (same_side_weight > 0.0) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        edges.push_back({i, j, same_side_weight});
        edges.push_back({m + i, m + j, same_side_weight});
      }
    }
  }
  return WeightedGraph(2 * m, edges);
}

WeightedGraph make_embedded_clique_instance(int n, double eps) {
  if (n < 2 || !(eps > 0.0) || eps > 1.0) {
    throw std::invalid_argument("embedded clique needs n >= 2 and eps in (0, 1]");
  }
  // The small slack keeps products like 0.2 * 20 from rounding up.
  const int c = static_cast<int>(std::ceil(eps * n - 1e-9));
  if (c < 2) {
    throw std::invalid_argument("embedded clique size " + std::to_string(c) + " is below 2");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      edges.push_back({i, j, 1.0});
    }
  }
  return WeightedGraph(n, edges);
}

WeightedGraph make_random_instance(int n, double density, WeightDistribution dist,
                                   std::uint64_t seed) {
  if (n < 2) {
    throw std::invalid_argument("random instance needs n >= 2");
  }
  if (!(density > 0.0) || density > 1.0) {
    throw std::invalid_argument("density must lie in (0, 1]");
  }
  RngStream rng(seed, label_hash("random-instance"));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool present = rng.uniform() < density;
      const double w = dist == WeightDistribution::Unit ? 1.0 : rng.uniform();
      if (present && w > 0.0) {
        edges.push_back({i, j, w});
      }
    }
  }
  return WeightedGraph(n, edges);
}

WeightedGraph make_clique(int n, double w) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back({i, j, w});
    }
  }
  return WeightedGraph(n, edges);
}

WeightedGraph make_cycle(int n, double w) {
  if (n < 3) {
    throw std::invalid_argument("cycle needs n >= 3");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n), w});
  }
  return WeightedGraph(n, edges);
}

std::string graph_to_json(const WeightedGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.size();
  auto& arr = doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) {
    arr.push_back({e.u, e.v, e.w});
  }
  return doc.dump();
}

WeightedGraph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::runtime_error(std::string("malformed graph file: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw std::runtime_error("malformed graph file: expected {\"n\": int, \"edges\": [...]}");
  }
  const int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number()) {
      throw std::runtime_error("malformed graph file: each edge must be [i, j, w]");
    }
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  return WeightedGraph(n, edges);
}

void write_graph(const WeightedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << graph_to_json(g) << '\n';
}

WeightedGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

}  // namespace hcopt
