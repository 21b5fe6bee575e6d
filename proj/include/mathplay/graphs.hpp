#pragma once

// Undirected multigraphs with loops, adjacency matrices and walk counting.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mathplay::graphs {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  // Throws InvalidArgument when vertex_count is 0 or an endpoint is out of range.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Degree with the usual convention: a loop contributes 2.
  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// Reads "n" on the first significant line, then one "i j" pair per line.
// Blank lines and '#' comments are ignored. Throws ParseError.
Graph parse_graph(std::string_view text);

class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t order);
  SquareMatrix(std::size_t order, std::vector<std::uint64_t> entries);

  static SquareMatrix identity(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::uint64_t at(std::size_t row, std::size_t col) const { return entries_.at(row * order_ + col); }
  std::uint64_t& at(std::size_t row, std::size_t col) { return entries_.at(row * order_ + col); }
  const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }

  // Exact product; throws Overflow if any entry leaves the 64-bit range.
  SquareMatrix operator*(const SquareMatrix& rhs) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<std::uint64_t> entries_;
};

// Entry (i,j) is the number of edges joining i and j; a loop adds 1 to (i,i).
SquareMatrix adjacency_matrix(const Graph& g);

SquareMatrix matrix_power(const SquareMatrix& m, std::uint64_t k);

std::uint64_t count_walks(const Graph& g, Vertex from, Vertex to, std::uint64_t length);

struct EulerCircuit {};
struct EulerPath {
  Vertex start;
  Vertex end;
};
struct NotEulerian {};
using EulerianClass = std::variant<EulerCircuit, EulerPath, NotEulerian>;

// Isolated vertices are ignored. A graph with no edges is a (trivial) circuit.
EulerianClass eulerian_class(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

Graph complete_graph(std::size_t n);

}  // namespace mathplay::graphs
