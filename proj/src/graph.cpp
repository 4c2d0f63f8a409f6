#include "gral/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gral {

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw PreconditionViolation("duplicate vertex name");
  vertex_names_ = std::move(vertices);
  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].name == edges[i - 1].name)
      throw PreconditionViolation("duplicate edge name " + edges[i].name);
  for (const auto& e : edges)
    if (find_vertex(e.name)) throw PreconditionViolation("name used for both vertex and edge: " + e.name);
  out_.resize(vertex_names_.size());
  in_.resize(vertex_names_.size());
  for (const auto& e : edges) {
    const auto s = find_vertex(e.src);
    const auto r = find_vertex(e.dst);
    if (!s || !r) throw PreconditionViolation("edge " + e.name + " references an unknown vertex");
    const auto id = static_cast<EdgeId>(edge_names_.size());
    edge_names_.push_back(e.name);
    src_.push_back(*s);
    dst_.push_back(*r);
    out_[*s].push_back(id);
    in_[*r].push_back(id);
  }
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names_.begin());
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
  auto it = std::lower_bound(edge_names_.begin(), edge_names_.end(), name);
  if (it == edge_names_.end() || *it != name) return std::nullopt;
  return static_cast<EdgeId>(it - edge_names_.begin());
}

VertexId Graph::vertex(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw UnknownGenerator("unknown vertex " + name);
}

EdgeId Graph::edge(const std::string& name) const {
  if (auto e = find_edge(name)) return *e;
  throw UnknownGenerator("unknown edge " + name);
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  for (EdgeId e = 0; e < num_edges(); ++e)
    out.push_back({edge_names_[e], vertex_names_[src_[e]], vertex_names_[dst_[e]]});
  return out;
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = edges.size() <=> o.edges.size(); c != 0) return c;
  if (auto c = edges <=> o.edges; c != 0) return c;
  return start <=> o.start;
}

Path make_path(const Graph& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) throw PreconditionViolation("use Path::vertex for length-0 paths");
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (g.range(edges[i - 1]) != g.source(edges[i]))
      throw PreconditionViolation("edges " + g.edge_name(edges[i - 1]) + " and " +
                                  g.edge_name(edges[i]) + " are not composable");
  return {g.source(edges.front()), edges};
}

bool is_prefix(const Path& p, const Path& q) {
  if (p.start != q.start || p.edges.size() > q.edges.size()) return false;
  return std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
}

Path concat(const Path& p, const Path& q) {
  Path out = p;
  out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
  return out;
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.start);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += g.edge_name(p.edges[i]);
  }
  return out;
}

VertexClasses vertex_classify(const Graph& g) {
  VertexClasses c;
  for (VertexId v = 0; v < g.num_vertices(); ++v) (g.is_sink(v) ? c.sinks : c.regular).push_back(v);
  return c;
}

std::vector<Path> paths(const Graph& g, std::size_t n, std::optional<VertexId> target) {
  std::vector<Path> layer;
  for (VertexId v = 0; v < g.num_vertices(); ++v) layer.push_back(Path::vertex(v));
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<Path> next;
    for (const auto& p : layer)
      for (EdgeId e : g.out_edges(p.range(g))) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    layer = std::move(next);
  }
  if (target) std::erase_if(layer, [&](const Path& p) { return p.range(g) != *target; });
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::vector<Path> paths_up_to(const Graph& g, std::size_t n) {
  std::vector<Path> out;
  for (std::size_t len = 0; len <= n; ++len) {
    auto layer = paths(g, len);
    if (layer.empty()) break;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

std::optional<std::vector<VertexId>> topological_order(const Graph& g) {
  std::vector<std::size_t> indeg(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) ++indeg[g.range(e)];
  std::vector<VertexId> order, stack;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (EdgeId e : g.out_edges(v))
      if (--indeg[g.range(e)] == 0) stack.push_back(g.range(e));
  }
  if (order.size() != g.num_vertices()) return std::nullopt;
  return order;
}

}  // namespace

bool is_acyclic(const Graph& g) { return topological_order(g).has_value(); }

std::optional<std::size_t> longest_path_length(const Graph& g) {
  auto order = topological_order(g);
  if (!order) return std::nullopt;
  std::vector<std::size_t> depth(g.num_vertices(), 0);
  std::size_t best = 0;
  for (VertexId v : *order)
    for (EdgeId e : g.out_edges(v)) {
      depth[g.range(e)] = std::max(depth[g.range(e)], depth[v] + 1);
      best = std::max(best, depth[g.range(e)]);
    }
  return best;
}

std::vector<VertexId> vertex_set(const Graph& g, const std::vector<std::string>& names) {
  std::set<VertexId> out;
  for (const auto& n : names) out.insert(g.vertex(n));
  return {out.begin(), out.end()};
}

std::vector<VertexId> all_regular(const Graph& g) { return vertex_classify(g).regular; }

Graph cohn_cover(const Graph& e, const std::vector<VertexId>& x) {
  for (VertexId v : x)
    if (v >= e.num_vertices() || !e.is_regular(v))
      throw XNotRegular("vertex " + (v < e.num_vertices() ? e.vertex_name(v) : std::to_string(v)) +
                        " is not regular");
  std::vector<char> in_y(e.num_vertices(), 0);
  for (VertexId v = 0; v < e.num_vertices(); ++v) in_y[v] = e.is_regular(v);
  for (VertexId v : x) in_y[v] = 0;

  std::vector<std::string> vertices = e.vertex_names();
  auto edges = e.edge_specs();
  std::set<std::string> taken(vertices.begin(), vertices.end());
  for (const auto& es : edges) taken.insert(es.name);
  auto fresh = [&](const std::string& base) {
    std::string name = base + kPrimeSuffix;
    if (!taken.insert(name).second) throw PreconditionViolation("primed name collides: " + name);
    return name;
  };
  for (VertexId v = 0; v < e.num_vertices(); ++v)
    if (in_y[v]) vertices.push_back(fresh(e.vertex_name(v)));
  for (EdgeId f = 0; f < e.num_edges(); ++f)
    if (in_y[e.range(f)])
      edges.push_back({fresh(e.edge_name(f)), e.vertex_name(e.source(f)),
                       e.vertex_name(e.range(f)) + kPrimeSuffix});
  return Graph(std::move(vertices), std::move(edges));
}

GraphObject::GraphObject(Graph g, std::vector<VertexId> xs) : graph(std::move(g)), x(std::move(xs)) {
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (VertexId v : x)
    if (v >= graph.num_vertices() || !graph.is_regular(v))
      throw XNotRegular("X contains a vertex that is not regular");
}

MorphismVerdict morphism_validate(const GraphMorphism& psi) {
  const Graph& f = psi.source.graph;
  const Graph& e = psi.target.graph;
  auto fail = [](std::string cond, std::string detail) {
    return MorphismVerdict{false, std::move(cond), std::move(detail)};
  };
  if (psi.vmap.size() != f.num_vertices() || psi.emap.size() != f.num_edges())
    return fail("a", "maps are not total on the source graph");
  for (VertexId v : psi.vmap)
    if (v >= e.num_vertices()) return fail("a", "vertex image out of range");
  for (EdgeId g : psi.emap)
    if (g >= e.num_edges()) return fail("a", "edge image out of range");
  for (EdgeId g = 0; g < f.num_edges(); ++g) {
    const EdgeId h = psi.emap[g];
    if (e.source(h) != psi.vmap[f.source(g)] || e.range(h) != psi.vmap[f.range(g)])
      return fail("hom", "edge " + f.edge_name(g) + " breaks s/r compatibility");
  }
  if (std::set<VertexId>(psi.vmap.begin(), psi.vmap.end()).size() != psi.vmap.size())
    return fail("a", "vertex map is not injective");
  if (std::set<EdgeId>(psi.emap.begin(), psi.emap.end()).size() != psi.emap.size())
    return fail("a", "edge map is not injective");
  for (VertexId y : psi.source.x)
    if (!std::binary_search(psi.target.x.begin(), psi.target.x.end(), psi.vmap[y]))
      return fail("b", "image of " + f.vertex_name(y) + " is not in X");
  for (VertexId y : psi.source.x) {
    std::vector<EdgeId> image;
    for (EdgeId g : f.out_edges(y)) image.push_back(psi.emap[g]);
    std::sort(image.begin(), image.end());
    if (image != e.out_edges(psi.vmap[y]))
      return fail("c", "edges out of " + f.vertex_name(y) + " do not map bijectively");
  }
  return {};
}

GraphMorphism compose(const GraphMorphism& psi, const GraphMorphism& phi) {
  if (!(phi.target.graph == psi.source.graph) || phi.target.x != psi.source.x)
    throw PreconditionViolation("morphisms are not composable");
  GraphMorphism out{phi.source, psi.target, {}, {}};
  for (VertexId v : phi.vmap) out.vmap.push_back(psi.vmap[v]);
  for (EdgeId e : phi.emap) out.emap.push_back(psi.emap[e]);
  return out;
}

GraphMorphism identity_morphism(const GraphObject& obj) {
  GraphMorphism out{obj, obj, {}, {}};
  out.vmap.resize(obj.graph.num_vertices());
  out.emap.resize(obj.graph.num_edges());
  std::iota(out.vmap.begin(), out.vmap.end(), VertexId{0});
  std::iota(out.emap.begin(), out.emap.end(), EdgeId{0});
  return out;
}

}  // namespace gral
