#include "hcopt/dendrogram.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hcopt {

Dendrogram::Dendrogram(std::vector<Node> nodes, int root) : root_(0) {
  if (root < 0 || root >= static_cast<int>(nodes.size())) {
    throw std::invalid_argument("dendrogram root out of range");
  }
  // Copy reachable nodes in post-order so children always precede parents.
  std::vector<int> remap(nodes.size(), -1);
  std::vector<char> visiting(nodes.size(), 0);
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (id < 0 || id >= static_cast<int>(nodes.size())) {
      throw std::invalid_argument("dendrogram child index out of range");
    }
    const Node& nd = nodes[id];
    if (expanded || nd.is_leaf()) {
      if (!nd.is_leaf()) {
        if (nd.left < 0 || nd.right < 0) {
          throw std::invalid_argument("internal dendrogram node needs two children");
        }
      } else if (nd.left >= 0 || nd.right >= 0) {
        throw std::invalid_argument("leaf node cannot have children");
      }
      if (remap[id] >= 0) {
        throw std::invalid_argument("dendrogram node reachable twice");
      }
      Node copy = nd;
      if (!copy.is_leaf()) {
        copy.left = remap[nd.left];
        copy.right = remap[nd.right];
        copy.size = nodes_[copy.left].size + nodes_[copy.right].size;
      } else {
        copy.size = 1;
      }
      remap[id] = static_cast<int>(nodes_.size());
      nodes_.push_back(copy);
      continue;
    }
    if (remap[id] >= 0 || visiting[id]) {
      throw std::invalid_argument("dendrogram node reachable twice");
    }
    visiting[id] = 1;
    stack.push_back({id, true});
    stack.push_back({nd.right, false});
    stack.push_back({nd.left, false});
  }
  root_ = remap[root];

  const int n = nodes_[root_].size;
  std::vector<char> hit(n, 0);
  for (const Node& nd : nodes_) {
    if (!nd.is_leaf()) {
      continue;
    }
    if (nd.leaf >= n || hit[nd.leaf]) {
      throw std::invalid_argument("dendrogram leaves must be a permutation of 0..n-1");
    }
    hit[nd.leaf] = 1;
  }
}

std::vector<int> Dendrogram::leaves_under(int id) const {
  std::vector<int> out;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const Node& nd = nodes_[stack.back()];
    stack.pop_back();
    if (nd.is_leaf()) {
      out.push_back(nd.leaf);
    } else {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
  return out;
}

std::vector<int> Dendrogram::parents() const {
  std::vector<int> parent(nodes_.size(), -1);
  for (int id = 0; id < static_cast<int>(nodes_.size()); ++id) {
    if (!nodes_[id].is_leaf()) {
      parent[nodes_[id].left] = id;
      parent[nodes_[id].right] = id;
    }
  }
  return parent;
}

bool operator==(const Dendrogram& a, const Dendrogram& b) {
  if (a.nodes_.size() != b.nodes_.size()) {
    return false;
  }
  std::vector<std::pair<int, int>> stack{{a.root_, b.root_}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.nodes_[x];
    const auto& ny = b.nodes_[y];
    if (nx.leaf != ny.leaf || nx.size != ny.size) {
      return false;
    }
    if (!nx.is_leaf()) {
      stack.push_back({nx.left, ny.left});
      stack.push_back({nx.right, ny.right});
    }
  }
  return true;
}

int TreeBuilder::leaf(int vertex) {
  if (vertex < 0) {
    throw std::invalid_argument("leaf vertex must be nonnegative");
  }
  nodes_.push_back({-1, -1, vertex, 1});
  return static_cast<int>(nodes_.size()) - 1;
}

int TreeBuilder::join(int left, int right) {
  const int count = static_cast<int>(nodes_.size());
  if (left < 0 || right < 0 || left >= count || right >= count || left == right) {
    throw std::invalid_argument("TreeBuilder::join: invalid child ids");
  }
  nodes_.push_back({left, right, -1, nodes_[left].size + nodes_[right].size});
  return count;
}

int TreeBuilder::caterpillar(std::span<const int> vertices) {
  if (vertices.empty()) {
    throw std::invalid_argument("caterpillar over an empty vertex list");
  }
  std::vector<int> leaves;
  leaves.reserve(vertices.size());
  for (int v : vertices) {
    leaves.push_back(leaf(v));
  }
  return chain(leaves);
}

int TreeBuilder::chain(std::span<const int> subtrees) {
  if (subtrees.empty()) {
    throw std::invalid_argument("chain over an empty subtree list");
  }
  int acc = subtrees.back();
  for (int i = static_cast<int>(subtrees.size()) - 2; i >= 0; --i) {
    acc = join(subtrees[i], acc);
  }
  return acc;
}

Dendrogram TreeBuilder::build(int root) const { return Dendrogram(nodes_, root); }

Dendrogram make_caterpillar(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) {
    order[i] = n - 1 - i;
  }
  TreeBuilder b;
  return b.build(b.caterpillar(order));
}

namespace {

nlohmann::json node_to_json(const Dendrogram& t, int id) {
  const auto& nd = t.node(id);
  if (nd.is_leaf()) {
    return {{"leaf", nd.leaf}};
  }
  return {{"children", nlohmann::json::array({node_to_json(t, nd.left), node_to_json(t, nd.right)})}};
}

int node_from_json(const nlohmann::json& j, TreeBuilder& b) {
  if (!j.is_object()) {
    throw std::runtime_error("malformed dendrogram: node must be an object");
  }
  if (j.contains("leaf")) {
    if (!j["leaf"].is_number_integer() || j.contains("children")) {
      throw std::runtime_error("malformed dendrogram: bad leaf node");
    }
    return b.leaf(j["leaf"].get<int>());
  }
  if (!j.contains("children") || !j["children"].is_array() || j["children"].size() != 2) {
    throw std::runtime_error("malformed dendrogram: internal node needs exactly two children");
  }
  const int l = node_from_json(j["children"][0], b);
  const int r = node_from_json(j["children"][1], b);
  return b.join(l, r);
}

}  // namespace

std::string dendrogram_to_json(const Dendrogram& t) { return node_to_json(t, t.root()).dump(); }

Dendrogram dendrogram_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::runtime_error(std::string("malformed dendrogram: ") + err.what());
  }
  TreeBuilder b;
  const int root = node_from_json(doc, b);
  try {
    return b.build(root);
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(std::string("malformed dendrogram: ") + err.what());
  }
}

}  // namespace hcopt
