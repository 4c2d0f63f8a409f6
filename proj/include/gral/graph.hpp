#pragma once

// Finite directed graphs E = (E^0, E^1, s, r), paths, and the morphisms of
// the category of pairs (E, X) with X a set of regular vertices.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gral/errors.hpp"

namespace gral {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeSpec {
  std::string name;
  std::string src;
  std::string dst;
};

/// Vertices and edges are stored sorted by name, so ids follow name order.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edge_names_.size(); }
  bool empty() const { return vertex_names_.empty(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  VertexId vertex(const std::string& name) const;
  EdgeId edge(const std::string& name) const;

  VertexId source(EdgeId e) const { return src_[e]; }
  VertexId range(EdgeId e) const { return dst_[e]; }
  /// s^{-1}(v), sorted by edge name.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

  bool is_sink(VertexId v) const { return out_[v].empty(); }
  bool is_regular(VertexId v) const { return !out_[v].empty(); }

  std::vector<EdgeSpec> edge_specs() const;
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  bool operator==(const Graph& o) const {
    return vertex_names_ == o.vertex_names_ && edge_names_ == o.edge_names_ && src_ == o.src_ &&
           dst_ == o.dst_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> src_;
  std::vector<VertexId> dst_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// A path: a vertex (length 0) or a composable edge sequence. `start` is
/// always s(path); for length 0 it is the vertex itself.
struct Path {
  VertexId start = 0;
  std::vector<EdgeId> edges;

  static Path vertex(VertexId v) { return {v, {}}; }

  std::size_t length() const { return edges.size(); }
  bool is_vertex() const { return edges.empty(); }
  VertexId source() const { return start; }
  VertexId range(const Graph& g) const { return edges.empty() ? start : g.range(edges.back()); }

  /// Ordering: length, then edges lexicographically (by name), then start.
  std::strong_ordering operator<=>(const Path& o) const;
  bool operator==(const Path& o) const = default;
};

/// Checks composability; throws PreconditionViolation otherwise.
Path make_path(const Graph& g, const std::vector<EdgeId>& edges);
bool is_prefix(const Path& p, const Path& q);
/// p followed by q; requires r(p) = s(q).
Path concat(const Path& p, const Path& q);
std::string format_path(const Graph& g, const Path& p);

struct VertexClasses {
  std::vector<VertexId> sinks;
  std::vector<VertexId> regular;
};

VertexClasses vertex_classify(const Graph& g);

/// P(n, v): all paths of length n (ending at v when given), in path order.
std::vector<Path> paths(const Graph& g, std::size_t n, std::optional<VertexId> target = std::nullopt);
/// All paths of length at most n.
std::vector<Path> paths_up_to(const Graph& g, std::size_t n);

bool is_acyclic(const Graph& g);
/// Length of the longest path; nullopt for graphs with cycles.
std::optional<std::size_t> longest_path_length(const Graph& g);

/// Reserved suffix for the duplicated vertices/edges of E(X).
inline constexpr const char* kPrimeSuffix = "'";

/// Vertex subset given by names, validated against the graph.
std::vector<VertexId> vertex_set(const Graph& g, const std::vector<std::string>& names);
std::vector<VertexId> all_regular(const Graph& g);

/// The graph E(X): adds v' for each v in Y = Reg(E) \ X and an edge
/// e' : s(e) -> r(e)' for each e with r(e) in Y.
Graph cohn_cover(const Graph& e, const std::vector<VertexId>& x);

/// Object of the category: a graph with a subset of its regular vertices.
struct GraphObject {
  Graph graph;
  std::vector<VertexId> x;  // sorted

  /// Throws XNotRegular when x is not contained in Reg(graph).
  GraphObject(Graph g, std::vector<VertexId> x);
};

struct GraphMorphism {
  GraphObject source;
  GraphObject target;
  std::vector<VertexId> vmap;  // indexed by source vertex
  std::vector<EdgeId> emap;    // indexed by source edge
};

struct MorphismVerdict {
  bool valid = true;
  /// "a", "b" or "c" for the first failed condition; "hom" for a broken
  /// graph-homomorphism equation.
  std::string failed;
  std::string detail;
};

MorphismVerdict morphism_validate(const GraphMorphism& psi);

/// Composite psi after phi (phi: A -> B, psi: B -> C).
GraphMorphism compose(const GraphMorphism& psi, const GraphMorphism& phi);
GraphMorphism identity_morphism(const GraphObject& obj);

}  // namespace gral
