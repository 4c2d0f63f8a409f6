#include "gral/io.hpp"

#include <fstream>
#include <map>

namespace gral {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<std::string> names(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of names");
  std::vector<std::string> out;
  for (const auto& n : j) out.push_back(n.get<std::string>());
  return out;
}

std::vector<std::uint32_t> row(const Json& j) {
  if (!j.is_array()) throw ParseError("table rows must be arrays");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) out.push_back(v.get<std::uint32_t>());
  return out;
}

Path path_from_json(const Graph& g, const Json& j) {
  if (j.is_object()) return Path::vertex(g.vertex(field(j, "vertex").get<std::string>()));
  if (j.is_string()) {
    // A bare vertex name.
    return Path::vertex(g.vertex(j.get<std::string>()));
  }
  std::vector<EdgeId> edges;
  for (const auto& n : j) edges.push_back(g.edge(n.get<std::string>()));
  if (edges.empty()) throw ParseError("empty path; use {\"vertex\": name}");
  return make_path(g, edges);
}

Json path_to_json(const Graph& g, const Path& p) {
  if (p.is_vertex()) return Json{{"vertex", g.vertex_name(p.start)}};
  Json out = Json::array();
  for (EdgeId e : p.edges) out.push_back(g.edge_name(e));
  return out;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

RingSpec ring_spec_from_json(const Json& j) {
  try {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "mod" || kind == "modular") return RingSpec::modular(field(j, "n").get<std::uint32_t>());
    if (kind == "product") {
      std::vector<RingSpec> factors;
      for (const auto& f : field(j, "factors")) factors.push_back(ring_spec_from_json(f));
      return RingSpec::product(std::move(factors));
    }
    if (kind == "table") {
      std::vector<std::vector<std::uint32_t>> add, mul;
      for (const auto& r : field(j, "add")) add.push_back(row(r));
      for (const auto& r : field(j, "mul")) mul.push_back(row(r));
      return RingSpec::table(field(j, "size").get<std::uint32_t>(), field(j, "zero").get<std::uint32_t>(),
                             field(j, "one").get<std::uint32_t>(), std::move(add), std::move(mul));
    }
    throw ParseError("unknown ring kind \"" + kind + "\"");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("ring spec: ") + e.what());
  }
}

Ring ring_from_json(const Json& j) { return Ring(ring_spec_from_json(j)); }

Json ring_to_json(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Modular:
      return {{"kind", "mod"}, {"n", spec.modulus}};
    case RingSpec::Kind::Product: {
      Json factors = Json::array();
      for (const auto& f : spec.factors) factors.push_back(ring_to_json(f));
      return {{"kind", "product"}, {"factors", factors}};
    }
    case RingSpec::Kind::Table:
      return {{"kind", "table"}, {"size", spec.size}, {"zero", spec.zero},
              {"one", spec.one},   {"add", spec.add},   {"mul", spec.mul}};
  }
  return {};
}

Elem elem_from_json(const Ring& ring, const Json& j) {
  if (j.is_number_integer()) {
    if (ring.kind() == RingSpec::Kind::Modular) return ring.from_int(j.get<std::int64_t>());
    const auto i = j.get<std::int64_t>();
    if (i < 0 || i >= static_cast<std::int64_t>(ring.order())) throw ParseError("ring element out of range");
    return elem(static_cast<std::uint32_t>(i));
  }
  if (j.is_array()) {
    if (ring.kind() != RingSpec::Kind::Product || j.size() != ring.factors().size())
      throw ParseError("tuple element does not match the ring");
    std::vector<Elem> parts;
    for (std::size_t i = 0; i < j.size(); ++i) parts.push_back(elem_from_json(ring.factors()[i], j[i]));
    return ring.join(parts);
  }
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    for (Elem a : ring.elements())
      if (ring.format(a) == text) return a;
    throw ParseError("no ring element \"" + text + "\"");
  }
  throw ParseError("cannot read a ring element from " + j.dump());
}

Json elem_to_json(const Ring& ring, Elem a) {
  if (ring.kind() != RingSpec::Kind::Product) return index(a);
  Json out = Json::array();
  const auto parts = ring.split(a);
  for (std::size_t i = 0; i < parts.size(); ++i) out.push_back(elem_to_json(ring.factors()[i], parts[i]));
  return out;
}

GraphFile graph_from_json(const Json& j) {
  try {
    std::vector<EdgeSpec> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges"))
        edges.push_back({field(e, "name").get<std::string>(), field(e, "src").get<std::string>(),
                         field(e, "dst").get<std::string>()});
    GraphFile out{Graph(names(field(j, "vertices")), std::move(edges)), std::nullopt};
    if (j.contains("x")) out.x = names(j.at("x"));
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

Json graph_to_json(const Graph& g, const std::optional<std::vector<VertexId>>& x) {
  Json edges = Json::array();
  for (const auto& e : g.edge_specs()) edges.push_back({{"name", e.name}, {"src", e.src}, {"dst", e.dst}});
  Json out{{"vertices", g.vertex_names()}, {"edges", edges}};
  if (x) {
    Json xs = Json::array();
    for (VertexId v : *x) xs.push_back(g.vertex_name(v));
    out["x"] = xs;
  }
  return out;
}

SpecPtr spec_from_graph_file(const GraphFile& file, const Ring& ring) {
  if (!file.x) return AlgebraSpec::leavitt(file.graph, ring);
  return AlgebraSpec::cohn(file.graph, vertex_set(file.graph, *file.x), ring);
}

GraphObject object_from_graph_file(const GraphFile& file) {
  return GraphObject(file.graph, file.x ? vertex_set(file.graph, *file.x) : all_regular(file.graph));
}

AlgebraElement element_from_json(const SpecPtr& spec, const Json& j) {
  const Graph& g = spec->graph();
  const Ring& R = spec->ring();
  AlgebraElement out(spec);
  try {
    const Json terms = j.is_array() ? j : Json::array({j});
    for (const auto& t : terms) {
      const Path alpha = path_from_json(g, field(t, "alpha"));
      const Path beta = t.contains("beta") ? path_from_json(g, t.at("beta")) : Path::vertex(alpha.range(g));
      const Elem c = t.contains("coeff") ? elem_from_json(R, t.at("coeff")) : R.one();
      out += AlgebraElement::monomial(spec, alpha, beta, c);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("element: ") + e.what());
  }
  return out;
}

Json element_to_json(const AlgebraElement& x) {
  const Graph& g = x.spec()->graph();
  Json out = Json::array();
  for (const auto& [m, c] : x.terms())
    out.push_back({{"coeff", elem_to_json(x.spec()->ring(), c)},
                   {"alpha", path_to_json(g, m.alpha)},
                   {"beta", path_to_json(g, m.beta)}});
  return out;
}

GraphMorphism morphism_from_json(const Json& j, const Graph& source, const Graph& target) {
  try {
    const auto sx = j.contains("sourceX") ? vertex_set(source, names(j.at("sourceX"))) : all_regular(source);
    const auto tx = j.contains("targetX") ? vertex_set(target, names(j.at("targetX"))) : all_regular(target);
    GraphMorphism out{GraphObject(source, sx), GraphObject(target, tx), {}, {}};
    const Json& vmap = field(j, "vmap");
    const Json emap = j.contains("emap") ? j.at("emap") : Json::object();
    for (VertexId v = 0; v < source.num_vertices(); ++v) {
      const auto& name = source.vertex_name(v);
      if (!vmap.contains(name)) throw ParseError("vmap has no image for vertex " + name);
      out.vmap.push_back(target.vertex(vmap.at(name).get<std::string>()));
    }
    for (EdgeId e = 0; e < source.num_edges(); ++e) {
      const auto& name = source.edge_name(e);
      if (!emap.contains(name)) throw ParseError("emap has no image for edge " + name);
      out.emap.push_back(target.edge(emap.at(name).get<std::string>()));
    }
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("morphism: ") + e.what());
  }
}

CornerPtr corner_from_json(const Json& j) {
  Ring ring = ring_from_json(field(j, "ring"));
  const Elem e = elem_from_json(ring, field(j, "e"));
  const Json& alpha = field(j, "alpha");
  std::vector<Elem> table(ring.order(), ring.zero());
  std::vector<char> seen(ring.order(), 0);
  for (const auto& [key, image] : alpha.items()) {
    const Elem a = elem_from_json(ring, Json(key));
    table[index(a)] = elem_from_json(ring, image);
    seen[index(a)] = 1;
  }
  for (Elem a : ring.elements())
    if (!seen[index(a)]) throw ParseError("alpha has no image for " + ring.format(a));
  return csl_make(std::move(ring), e, std::move(table));
}

CslElement csl_element_from_json(const CornerPtr& ring, const Json& j) {
  CslElement out(ring);
  try {
    const Json terms = j.is_array() ? j : Json::array({j});
    for (const auto& t : terms) {
      const int d = field(t, "degree").get<int>();
      const Elem c = t.contains("coeff") ? elem_from_json(ring->ring(), t.at("coeff")) : ring->ring().one();
      out = out + CslElement::term(ring, d, c);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("corner element: ") + e.what());
  }
  return out;
}

}  // namespace gral
