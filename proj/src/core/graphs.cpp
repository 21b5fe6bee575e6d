#include "mathplay/graphs.hpp"

#include <charconv>
#include <numeric>
#include <string>

#include "mathplay/error.hpp"
#include "text_util.hpp"

namespace mathplay::graphs {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "walk count exceeds 64-bit range");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "walk count exceeds 64-bit range");
  return out;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");
  for (const auto& [a, b] : edges_) {
    if (a >= vertex_count_ || b >= vertex_count_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge {" + std::to_string(a) + "," + std::to_string(b) + "} has an endpoint out of range");
    }
  }
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= vertex_count_) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(vertex_count_, 0);
  for (const auto& [a, b] : edges_) {
    ++out[a];
    ++out[b];
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  std::size_t vertex_count = 0;
  bool have_count = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  for (auto line : text_util::lines(text)) {
    ++line_no;
    line = text_util::trim(text_util::strip_comment(line));
    if (line.empty()) continue;
    const auto fields = text_util::split_ws(line);
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (!have_count) {
      if (fields.size() != 1 || !text_util::parse_uint(fields[0], vertex_count)) {
        throw Error(ErrorCode::ParseError, where + "expected the vertex count");
      }
      have_count = true;
      continue;
    }
    std::size_t a = 0;
    std::size_t b = 0;
    if (fields.size() != 2 || !text_util::parse_uint(fields[0], a) || !text_util::parse_uint(fields[1], b)) {
      throw Error(ErrorCode::ParseError, where + "expected an edge \"i j\"");
    }
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(ErrorCode::ParseError, where + "endpoint out of range");
    }
    edges.emplace_back(a, b);
  }
  if (!have_count) throw Error(ErrorCode::ParseError, "missing vertex count");
  if (vertex_count == 0) throw Error(ErrorCode::ParseError, "vertex count must be positive");
  return Graph(vertex_count, std::move(edges));
}

SquareMatrix::SquareMatrix(std::size_t order) : order_(order), entries_(order * order, 0) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");
}

SquareMatrix::SquareMatrix(std::size_t order, std::vector<std::uint64_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "matrix order must be positive");
  if (entries_.size() != order * order) throw Error(ErrorCode::InvalidArgument, "entry count must be order^2");
}

SquareMatrix SquareMatrix::identity(std::size_t order) {
  SquareMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
  if (rhs.order_ != order_) throw Error(ErrorCode::InvalidArgument, "matrix orders differ");
  SquareMatrix out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    for (std::size_t j = 0; j < order_; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < order_; ++k) {
        sum = checked_add(sum, checked_mul(at(i, k), rhs.at(k, j)));
      }
      out.at(i, j) = sum;
    }
  }
  return out;
}

SquareMatrix adjacency_matrix(const Graph& g) {
  SquareMatrix m(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    if (a == b) {
      m.at(a, a) += 1;
    } else {
      m.at(a, b) += 1;
      m.at(b, a) += 1;
    }
  }
  return m;
}

SquareMatrix matrix_power(const SquareMatrix& m, std::uint64_t k) {
  SquareMatrix result = SquareMatrix::identity(m.order());
  SquareMatrix base = m;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::uint64_t count_walks(const Graph& g, Vertex from, Vertex to, std::uint64_t length) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "walk endpoint out of range");
  }
  return matrix_power(adjacency_matrix(g), length).at(from, to);
}

EulerianClass eulerian_class(const Graph& g) {
  const auto deg = g.degrees();
  DisjointSets sets(g.vertex_count());
  for (const auto& [a, b] : g.edges()) sets.unite(a, b);

  std::vector<Vertex> odd;
  std::size_t component = g.vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] == 0) continue;
    const auto root = sets.find(v);
    if (component == g.vertex_count()) {
      component = root;
    } else if (root != component) {
      return NotEulerian{};
    }
    if (deg[v] % 2 == 1) odd.push_back(v);
  }
  if (odd.empty()) return EulerCircuit{};
  if (odd.size() == 2) return EulerPath{odd[0], odd[1]};
  return NotEulerian{};
}

bool is_connected(const Graph& g) {
  DisjointSets sets(g.vertex_count());
  for (const auto& [a, b] : g.edges()) sets.unite(a, b);
  const auto root = sets.find(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (sets.find(v) != root) return false;
  }
  return true;
}

bool is_tree(const Graph& g) {
  for (const auto& [a, b] : g.edges()) {
    if (a == b) return false;
  }
  return g.edges().size() + 1 == g.vertex_count() && is_connected(g);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

}  // namespace mathplay::graphs
