#pragma once

// JSON file formats.
//   ring:     {"kind":"mod","n":4} | {"kind":"product","factors":[...]} |
//             {"kind":"table","size":k,"zero":i,"one":j,"add":[[..]],"mul":[[..]]}
//   element of a ring: integer index, array of factor encodings (products), or
//             the formatted text, e.g. "(1,0)".
//   graph:    {"vertices":[..],"edges":[{"name":..,"src":..,"dst":..}],"x":[..]}
//             ("x" omitted means every regular vertex, i.e. Leavitt)
//   algebra element: [{"coeff":c,"alpha":["e","f"] | {"vertex":"v"},"beta":[..]}]
//             (coeff defaults to 1, beta to the vertex r(alpha))
//   morphism: {"vmap":{..},"emap":{..},"sourceX":[..],"targetX":[..]}
//   corner:   {"ring":..,"e":..,"alpha":{"<elt>":"<image>",..}}
//   corner element: [{"degree":d,"coeff":c}]

#include <optional>
#include <string>
#include <vector>

#include "gral/cornerlaurent.hpp"
#include "gral/graph.hpp"
#include "gral/pathalg.hpp"
#include "json.hpp"

namespace gral {

using Json = nlohmann::json;

/// Reads and parses a file; ParseError on failure.
Json load_json(const std::string& path);

RingSpec ring_spec_from_json(const Json& j);
Ring ring_from_json(const Json& j);
Json ring_to_json(const RingSpec& spec);

Elem elem_from_json(const Ring& ring, const Json& j);
Json elem_to_json(const Ring& ring, Elem a);

struct GraphFile {
  Graph graph;
  std::optional<std::vector<std::string>> x;
};

GraphFile graph_from_json(const Json& j);
Json graph_to_json(const Graph& g, const std::optional<std::vector<VertexId>>& x = std::nullopt);

/// Leavitt when the file has no "x", relative Cohn otherwise.
SpecPtr spec_from_graph_file(const GraphFile& file, const Ring& ring);
GraphObject object_from_graph_file(const GraphFile& file);

AlgebraElement element_from_json(const SpecPtr& spec, const Json& j);
Json element_to_json(const AlgebraElement& x);

GraphMorphism morphism_from_json(const Json& j, const Graph& source, const Graph& target);

CornerPtr corner_from_json(const Json& j);
CslElement csl_element_from_json(const CornerPtr& ring, const Json& j);

}  // namespace gral
