#include "gral/morphisms.hpp"

#include <map>
#include <sstream>

#include "gral/linsolve.hpp"

namespace gral {

namespace {

bool degree_is(const AlgebraElement& x, int d) {
  if (x.is_zero()) return true;
  const auto deg = x.degree();
  return deg && *deg == d;
}

void expect(bool ok, const std::string& relation, const std::string& detail) {
  if (!ok) throw RelationViolation(relation, detail);
}

bool matches(const AlgebraSpec& spec, const GraphObject& obj) {
  return spec.graph() == obj.graph && spec.x() == obj.x;
}

bool same_algebra(const SpecPtr& a, const SpecPtr& b) {
  return a == b || (a->graph() == b->graph() && a->x() == b->x() && a->ring() == b->ring());
}

std::string generator_name(const AlgebraSpec& spec, int kind, std::uint32_t id) {
  const Graph& g = spec.graph();
  if (kind == 0) return "vertex " + g.vertex_name(id);
  if (kind == 1) return "edge " + g.edge_name(id);
  return "ghost " + g.edge_name(id) + "*";
}

}  // namespace

void validate_relations(const AlgebraHom& h) {
  const AlgebraSpec& S = *h.source;
  const Graph& g = S.graph();
  if (h.vertex_images.size() != g.num_vertices() || h.edge_images.size() != g.num_edges() ||
      h.ghost_images.size() != g.num_edges())
    throw PreconditionViolation("generator image lists do not match the source graph");
  const auto& V = h.vertex_images;
  const auto& E = h.edge_images;
  const auto& G = h.ghost_images;
  for (const auto* list : {&V, &E, &G})
    for (const auto& x : *list)
      if (x.spec() != h.target) throw SpecMismatch("generator image outside the target algebra");

  for (VertexId v = 0; v < g.num_vertices(); ++v)
    expect(degree_is(V[v], 0), "degree", "image of vertex " + g.vertex_name(v) + " is not in degree 0");
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    expect(degree_is(E[e], 1), "degree", "image of edge " + g.edge_name(e) + " is not in degree 1");
    expect(degree_is(G[e], -1), "degree", "image of ghost " + g.edge_name(e) + "* is not in degree -1");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
      const auto p = V[v] * V[w];
      expect(v == w ? p == V[v] : p.is_zero(), "(i)", g.vertex_name(v) + " " + g.vertex_name(w));
    }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& name = g.edge_name(e);
    expect(V[g.source(e)] * E[e] == E[e] && E[e] * V[g.range(e)] == E[e], "(ii)", "edge " + name);
    expect(V[g.range(e)] * G[e] == G[e] && G[e] * V[g.source(e)] == G[e], "(iii)", "ghost " + name + "*");
    for (EdgeId f = 0; f < g.num_edges(); ++f) {
      const auto p = G[e] * E[f];
      expect(e == f ? p == V[g.range(e)] : p.is_zero(), "(iv)", name + "* " + g.edge_name(f));
    }
  }
  for (VertexId v : S.x()) {
    AlgebraElement sum(h.target);
    for (EdgeId e : g.out_edges(v)) sum += E[e] * G[e];
    expect(sum == V[v], "(v)", "vertex " + g.vertex_name(v));
  }
}

AlgebraHom make_hom(SpecPtr source, SpecPtr target, std::vector<AlgebraElement> vertices,
                    std::vector<AlgebraElement> edges, std::vector<AlgebraElement> ghosts) {
  AlgebraHom h{std::move(source), std::move(target), std::move(vertices), std::move(edges), std::move(ghosts)};
  validate_relations(h);
  return h;
}

SpecPtr object_algebra(const GraphObject& obj, const Ring& ring) {
  return AlgebraSpec::cohn(obj.graph, obj.x, ring);
}

AlgebraHom induced_hom(const GraphMorphism& psi, const Ring& ring) {
  return induced_hom(psi, object_algebra(psi.source, ring), object_algebra(psi.target, ring));
}

AlgebraHom induced_hom(const GraphMorphism& psi, SpecPtr source, SpecPtr target) {
  const auto verdict = morphism_validate(psi);
  if (!verdict.valid)
    throw PreconditionViolation("graph morphism fails condition (" + verdict.failed + "): " + verdict.detail);
  if (!matches(*source, psi.source) || !matches(*target, psi.target))
    throw SpecMismatch("algebras do not belong to the morphism's objects");
  const Graph& f = psi.source.graph;
  std::vector<AlgebraElement> V, E, G;
  for (VertexId v = 0; v < f.num_vertices(); ++v) V.push_back(AlgebraElement::vertex(target, psi.vmap[v]));
  for (EdgeId e = 0; e < f.num_edges(); ++e) {
    E.push_back(AlgebraElement::edge(target, psi.emap[e]));
    G.push_back(AlgebraElement::ghost(target, psi.emap[e]));
  }
  return make_hom(std::move(source), std::move(target), std::move(V), std::move(E), std::move(G));
}

AlgebraElement hom_apply(const AlgebraHom& h, const AlgebraElement& x) {
  if (x.spec() != h.source) throw SpecMismatch("element is not in the source algebra");
  AlgebraElement out(h.target);
  for (const auto& [m, c] : x.terms()) {
    std::optional<AlgebraElement> image;
    auto times = [&](const AlgebraElement& y) { image = image ? *image * y : y; };
    if (m.alpha.is_vertex() && m.beta.is_vertex()) times(h.vertex_images[m.alpha.start]);
    for (EdgeId e : m.alpha.edges) times(h.edge_images[e]);
    for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) times(h.ghost_images[*it]);
    out += image->scaled(c);
  }
  return out;
}

AlgebraHom hom_compose(const AlgebraHom& g, const AlgebraHom& f) {
  if (g.source != f.target) throw SpecMismatch("homs are not composable");
  AlgebraHom out{f.source, g.target, {}, {}, {}};
  for (const auto& x : f.vertex_images) out.vertex_images.push_back(hom_apply(g, x));
  for (const auto& x : f.edge_images) out.edge_images.push_back(hom_apply(g, x));
  for (const auto& x : f.ghost_images) out.ghost_images.push_back(hom_apply(g, x));
  return out;
}

std::optional<std::string> first_difference(const AlgebraHom& a, const AlgebraHom& b) {
  if (!same_algebra(a.source, b.source) || !same_algebra(a.target, b.target))
    return std::string("homs have different source or target algebras");
  auto differ = [&](const AlgebraElement& x, const AlgebraElement& y) {
    return a.target == b.target ? !(x == y) : x.format() != y.format();
  };
  const std::vector<AlgebraElement>* lists[2][3] = {{&a.vertex_images, &a.edge_images, &a.ghost_images},
                                                     {&b.vertex_images, &b.edge_images, &b.ghost_images}};
  for (int kind = 0; kind < 3; ++kind)
    for (std::size_t i = 0; i < lists[0][kind]->size(); ++i) {
      const auto& x = (*lists[0][kind])[i];
      const auto& y = (*lists[1][kind])[i];
      if (differ(x, y))
        return generator_name(*a.source, kind, static_cast<std::uint32_t>(i)) + ": " + x.format() + " vs " +
               y.format();
    }
  return std::nullopt;
}

AlgebraHom cohn_to_leavitt(const SpecPtr& cohn) {
  const Graph& e = cohn->graph();
  const Graph cover = cohn_cover(e, cohn->x());
  auto target = AlgebraSpec::leavitt(cover, cohn->ring());
  std::vector<char> in_y(e.num_vertices(), 0);
  for (VertexId v = 0; v < e.num_vertices(); ++v) in_y[v] = e.is_regular(v) && !cohn->in_x(v);
  std::vector<AlgebraElement> V, E, G;
  for (VertexId v = 0; v < e.num_vertices(); ++v) {
    auto img = AlgebraElement::vertex(target, cover.vertex(e.vertex_name(v)));
    if (in_y[v]) img += AlgebraElement::vertex(target, cover.vertex(e.vertex_name(v) + kPrimeSuffix));
    V.push_back(std::move(img));
  }
  for (EdgeId f = 0; f < e.num_edges(); ++f) {
    auto img = AlgebraElement::edge(target, cover.edge(e.edge_name(f)));
    if (in_y[e.range(f)]) img += AlgebraElement::edge(target, cover.edge(e.edge_name(f) + kPrimeSuffix));
    G.push_back(img.involution());
    E.push_back(std::move(img));
  }
  return make_hom(cohn, std::move(target), std::move(V), std::move(E), std::move(G));
}

std::string IsoVerdict::format() const {
  std::ostringstream out;
  for (const auto& r : ranks)
    out << "degree " << r.degree << ": source rank " << r.source_rank << ", target rank " << r.target_rank << "\n";
  out << "total rank: source " << source_total << ", target " << target_total << "\n";
  out << "verdict: " << to_string(verdict) << "\n";
  if (!detail.empty()) out << "detail: " << detail << "\n";
  return out.str();
}

IsoVerdict verify_graded_iso(const AlgebraHom& h, std::size_t degree_bound, std::size_t size_bound,
                             std::size_t cap) {
  const Ring& R = h.target->ring();
  IsoVerdict out;
  const auto ls = longest_path_length(h.source->graph());
  const auto lt = longest_path_length(h.target->graph());
  const bool exact = ls && lt && size_bound >= *ls && size_bound >= *lt &&
                     degree_bound >= std::max(*ls, *lt);
  bool not_found = false;
  const int D = static_cast<int>(degree_bound);
  for (int d = -D; d <= D; ++d) {
    const auto src = reduced_monomials(*h.source, size_bound, d);
    const auto src_ext = exact ? src : reduced_monomials(*h.source, size_bound + 1, d);
    const auto tgt = reduced_monomials(*h.target, size_bound, d);
    out.ranks.push_back({d, src.size(), tgt.size()});
    out.source_total += src.size();
    out.target_total += tgt.size();

    auto images = [&](const std::vector<Monomial>& ms) {
      std::vector<AlgebraElement> imgs;
      for (const auto& m : ms)
        imgs.push_back(hom_apply(h, AlgebraElement::monomial(h.source, m.alpha, m.beta, h.source->ring().one())));
      return imgs;
    };
    // sum_j z_j image_j = rhs, one equation per target monomial
    auto system = [&](const std::vector<AlgebraElement>& imgs, const AlgebraElement& rhs) {
      std::map<Monomial, LinearEquation> eqs;
      for (std::size_t j = 0; j < imgs.size(); ++j)
        for (const auto& [m, c] : imgs[j].terms()) eqs[m].terms.push_back({R.one(), j, c});
      for (auto& [m, eq] : eqs) eq.rhs = R.zero();
      for (const auto& [m, c] : rhs.terms()) eqs[m].rhs = c;
      LinearSystem sys;
      sys.num_vars = imgs.size();
      for (auto& [m, eq] : eqs) sys.equations.push_back(std::move(eq));
      return sys;
    };

    const auto imgs = images(src);
    if (!kernel_is_trivial(R, system(imgs, AlgebraElement(h.target)), cap)) {
      out.verdict = Verdict::Fails;
      out.detail = "nonzero kernel among degree " + std::to_string(d) + " spanning monomials";
      return out;
    }
    const auto imgs_ext = exact ? imgs : images(src_ext);
    for (const auto& t : tgt) {
      const auto target_elem = AlgebraElement::monomial(h.target, t.alpha, t.beta, R.one());
      if (solve_linear_system(R, system(imgs_ext, target_elem), cap)) continue;
      const std::string what = "target basis element " + format_monomial(h.target->graph(), t) + " in degree " +
                               std::to_string(d) + " has no preimage";
      if (exact) {
        out.verdict = Verdict::Fails;
        out.detail = what;
        return out;
      }
      if (!not_found) out.detail = what + " at bound";
      not_found = true;
    }
  }
  out.verdict = not_found ? Verdict::NotFoundAtBound : exact ? Verdict::HoldsExactly : Verdict::HoldsAtBound;
  return out;
}

ChainVerdict chain_colimit_check(const GraphChain& chain, const Ring& ring,
                                 const std::optional<std::vector<AlgebraHom>>& cocone) {
  ChainVerdict out;
  const std::size_t m = chain.objects.size();
  if (m == 0 || chain.maps.size() + 1 != m) {
    out.commutes = false;
    out.detail = "a chain of k objects needs k - 1 morphisms";
    return out;
  }
  if (cocone && cocone->size() != m) {
    out.commutes = false;
    out.detail = "cocone needs one hom per object";
    return out;
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto& psi = chain.maps[i];
    const auto& a = chain.objects[i];
    const auto& b = chain.objects[i + 1];
    if (!(psi.source.graph == a.graph) || psi.source.x != a.x || !(psi.target.graph == b.graph) ||
        psi.target.x != b.x) {
      out.commutes = false;
      out.detail = "morphism " + std::to_string(i) + " does not connect objects " + std::to_string(i) + " and " +
                   std::to_string(i + 1);
      return out;
    }
  }
  std::vector<SpecPtr> specs;
  for (std::size_t i = 0; i < m; ++i) {
    if (cocone) {
      if (!matches(*(*cocone)[i].source, chain.objects[i]))
        throw SpecMismatch("cocone hom " + std::to_string(i) + " does not start at object " + std::to_string(i));
      specs.push_back((*cocone)[i].source);
    } else {
      specs.push_back(object_algebra(chain.objects[i], ring));
    }
  }
  std::vector<AlgebraHom> induced;
  for (std::size_t i = 0; i + 1 < m; ++i) induced.push_back(induced_hom(chain.maps[i], specs[i], specs[i + 1]));

  auto generators = [](const AlgebraHom& h) {
    return h.vertex_images.size() + 2 * h.edge_images.size();
  };
  // C(psi_{j-1} ... psi_i) = C(psi_{j-1}) ... C(psi_i)
  for (std::size_t i = 0; i < m; ++i) {
    GraphMorphism composite = identity_morphism(chain.objects[i]);
    AlgebraHom composed = induced_hom(composite, specs[i], specs[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      composite = compose(chain.maps[j - 1], composite);
      composed = hom_compose(induced[j - 1], composed);
      const auto direct = induced_hom(composite, specs[i], specs[j]);
      out.checked += generators(direct);
      if (auto diff = first_difference(direct, composed)) {
        out.commutes = false;
        out.detail = "functoriality fails from object " + std::to_string(i) + " to " + std::to_string(j) + " at " +
                     *diff;
        return out;
      }
    }
  }
  std::vector<AlgebraHom> legs;
  if (cocone) {
    legs = *cocone;
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      GraphMorphism composite = identity_morphism(chain.objects[i]);
      for (std::size_t j = i + 1; j < m; ++j) composite = compose(chain.maps[j - 1], composite);
      legs.push_back(induced_hom(composite, specs[i], specs[m - 1]));
    }
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto through = hom_compose(legs[i + 1], induced[i]);
    out.checked += generators(through);
    if (auto diff = first_difference(legs[i], through)) {
      out.commutes = false;
      out.detail = "cocone does not commute at object " + std::to_string(i) + ", " + *diff;
      return out;
    }
  }
  out.detail = "all composites and cocone legs agree on " + std::to_string(out.checked) + " generator images";
  return out;
}

}  // namespace gral
