#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gral/io.hpp"
#include "gral/morphisms.hpp"

using namespace gral;

namespace {

std::string data(const std::string& name) { return std::string(GRAL_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("ring files") {
  const Ring z4 = ring_from_json(load_json(data("z4.json")));
  CHECK(z4.order() == 4);
  const Ring f4 = ring_from_json(load_json(data("f4.json")));
  CHECK(f4.kind() == RingSpec::Kind::Table);
  CHECK(is_vnr(f4).regular);
  for (const char* name : {"z4.json", "f4.json", "swap.json"}) {
    const Json j = std::string(name) == "swap.json" ? load_json(data(name)).at("ring") : load_json(data(name));
    const RingSpec s = ring_spec_from_json(j);
    CHECK(ring_spec_from_json(ring_to_json(s)) == s);
  }
  CHECK_THROWS_AS(ring_spec_from_json(Json{{"kind", "weird"}}), ParseError);
  CHECK_THROWS_AS(ring_spec_from_json(Json{{"kind", "mod"}}), ParseError);
}

TEST_CASE("ring element encodings") {
  const Ring P(RingSpec::product({RingSpec::modular(2), RingSpec::modular(3)}));
  for (Elem a : P.elements()) {
    CHECK(elem_from_json(P, elem_to_json(P, a)) == a);
    CHECK(elem_from_json(P, Json(P.format(a))) == a);
  }
  const Ring z6 = Ring::modular(6);
  CHECK(elem_from_json(z6, Json(-1)) == elem(5));
  CHECK_THROWS_AS(elem_from_json(P, Json::array({1})), ParseError);
  CHECK_THROWS_AS(elem_from_json(P, Json("nope")), ParseError);
}

TEST_CASE("graph files") {
  const auto vw = graph_from_json(load_json(data("vw.json")));
  CHECK(vw.graph.num_vertices() == 2);
  CHECK_FALSE(vw.x.has_value());
  const auto spec = spec_from_graph_file(vw, Ring::modular(2));
  CHECK(spec->is_leavitt());
  const auto cohn = graph_from_json(load_json(data("vw_cohn.json")));
  REQUIRE(cohn.x.has_value());
  CHECK(cohn.x->empty());
  CHECK_FALSE(spec_from_graph_file(cohn, Ring::modular(2))->is_leavitt());
  const auto back = graph_from_json(graph_to_json(vw.graph, std::vector<VertexId>{}));
  CHECK(back.graph == vw.graph);
  CHECK(back.x == std::optional<std::vector<std::string>>(std::vector<std::string>{}));
  CHECK_THROWS_AS(load_json(data("bad.json")), ParseError);
  CHECK_THROWS_AS(load_json(data("missing.json")), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json{{"edges", Json::array()}}), ParseError);
}

TEST_CASE("element files round trip") {
  const auto spec = spec_from_graph_file(graph_from_json(load_json(data("vw.json"))), Ring::modular(6));
  const auto x = element_from_json(spec, load_json(data("two_f.json")));
  CHECK(x == AlgebraElement::edge(spec, 0).scaled(elem(2)));
  CHECK(element_from_json(spec, element_to_json(x)) == x);
  const auto v = element_from_json(spec, Json{{"alpha", {{"vertex", "v"}}}});
  CHECK(v == AlgebraElement::vertex(spec, spec->graph().vertex("v")));
  CHECK_THROWS(element_from_json(spec, Json{{"alpha", Json::array({"g"})}}));
}

TEST_CASE("morphism files") {
  const Graph vw = graph_from_json(load_json(data("vw.json"))).graph;
  const Graph l3 = graph_from_json(load_json(data("line3.json"))).graph;
  const auto psi = morphism_from_json(load_json(data("vw_to_line.json")), vw, l3);
  CHECK(morphism_validate(psi).valid);
  CHECK_NOTHROW(induced_hom(psi, Ring::modular(2)));
  const auto bad = morphism_from_json(load_json(data("collapse.json")), vw, vw);
  CHECK_FALSE(morphism_validate(bad).valid);
  CHECK_THROWS_AS(morphism_from_json(Json{{"vmap", {{"v", "v"}}}}, vw, vw), ParseError);
}

TEST_CASE("corner files") {
  const auto c = corner_from_json(load_json(data("laurent_z4.json")));
  CHECK(c->ring().order() == 4);
  const auto x = csl_element_from_json(c, Json::array({{{"degree", 1}, {"coeff", 2}}}));
  CHECK(x == CslElement::term(c, 1, elem(2)));
  CHECK_FALSE(csl_graded_witness(x).witness.has_value());

  const auto s = corner_from_json(load_json(data("swap.json")));
  CHECK(s->alpha(elem_from_json(s->ring(), Json("(1,0)"))) == elem_from_json(s->ring(), Json("(0,1)")));

  Json missing = load_json(data("laurent_z4.json"));
  missing["alpha"].erase("3");
  CHECK_THROWS_AS(corner_from_json(missing), ParseError);
}
