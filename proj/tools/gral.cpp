// Command-line front end. Exit status: 0 verified / holds, 1 counterexample
// or missing witness, 2 usage, parse or precondition error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gral/gradedstruct.hpp"
#include "gral/io.hpp"
#include "gral/matricial.hpp"
#include "gral/morphisms.hpp"
#include "gral/regularity.hpp"

using namespace gral;

namespace {

struct Config {
  std::size_t degree_bound = 3;
  std::size_t size_bound = 3;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string method;
  bool json = false;

  std::string ring_file;
  std::string graph_file;
  std::string element_file;
  std::string builtin;
  std::size_t level = 0;
  std::string morphism_file;
  std::string source_file;
  std::string target_file;
  std::string corner_file;
};

struct Output {
  int code = 0;
  std::string text;
  Json json = Json::object();
};

Ring load_ring(const Config& c) {
  if (c.ring_file.empty()) return Ring::modular(2);
  return ring_from_json(load_json(c.ring_file));
}

SpecPtr load_spec(const Config& c) {
  if (c.graph_file.empty()) throw ParseError("--graph is required");
  return spec_from_graph_file(graph_from_json(load_json(c.graph_file)), load_ring(c));
}

std::optional<WitnessMethod> parse_method(const std::string& m) {
  if (m.empty()) return std::nullopt;
  if (m == "constructive") return WitnessMethod::Constructive;
  if (m == "oracle") return WitnessMethod::Oracle;
  throw ParseError("--method must be constructive or oracle");
}

Json certificate_json(const WitnessCertificate& c) {
  Json j{{"element", c.element.format()},
         {"degree", c.degree},
         {"method", to_string(c.method)},
         {"bound", c.bound},
         {"verified", c.verified}};
  if (c.witness) {
    j["witness"] = c.witness->format();
  } else {
    j["absence"] = c.absence;
    j["exact"] = c.exact;
  }
  return j;
}

Json verdict_json(const PropertyVerdict& p) {
  Json degrees = Json::array();
  for (const auto& d : p.degrees)
    degrees.push_back({{"degree", d.degree}, {"verdict", to_string(d.verdict)}, {"detail", d.detail}});
  Json j{{"property", p.property}, {"verdict", to_string(p.verdict)}, {"degrees", degrees}};
  if (!p.note.empty()) j["note"] = p.note;
  if (!p.witness.empty()) j["witness"] = p.witness;
  return j;
}

// ---------------------------------------------------------------------------

Output check_ring(const Config& c) {
  if (c.ring_file.empty()) throw ParseError("check-ring needs a ring file");
  const Ring R = load_ring(c);
  Output out;
  std::ostringstream t;
  const auto vnr = is_vnr(R);
  const auto rad = jacobson_radical(R);
  const auto semi = is_semiprime_ring(R);
  t << "ring: " << R.describe() << "\n";
  t << "von-neumann-regular: " << (vnr.regular ? "true" : "false") << "\n";
  Json witnesses = Json::object();
  if (vnr.regular) {
    t << "witnesses:";
    for (Elem a : R.elements()) {
      t << " " << R.format(a) << "->" << R.format(vnr.witnesses[index(a)]);
      witnesses[R.format(a)] = R.format(vnr.witnesses[index(a)]);
    }
    t << "\n";
  } else {
    t << "counterexample: " << R.format(*vnr.counterexample) << "\n";
  }
  t << "radical: {";
  Json radical = Json::array();
  for (std::size_t i = 0; i < rad.size(); ++i) {
    t << (i ? ", " : "") << R.format(rad[i]);
    radical.push_back(R.format(rad[i]));
  }
  t << "}\n";
  t << "semiprime: " << (semi.semiprime ? "true" : "false");
  if (semi.witness) t << " (witness " << R.format(*semi.witness) << ")";
  t << "\n";
  out.text = t.str();
  out.json = {{"ring", R.describe()}, {"vnr", vnr.regular}, {"radical", radical}, {"semiprime", semi.semiprime}};
  if (vnr.regular) out.json["witnesses"] = witnesses;
  if (vnr.counterexample) out.json["counterexample"] = R.format(*vnr.counterexample);
  if (semi.witness) out.json["semiprime_witness"] = R.format(*semi.witness);
  out.code = vnr.regular ? 0 : 1;
  return out;
}

Output lpa_witness(const Config& c) {
  const auto spec = load_spec(c);
  if (c.element_file.empty()) throw ParseError("--element is required");
  const auto x = element_from_json(spec, load_json(c.element_file));
  auto method = parse_method(c.method);
  if (!method)
    method = spec->is_leavitt() && is_vnr(spec->ring()).regular ? WitnessMethod::Constructive : WitnessMethod::Oracle;
  const auto cert = *method == WitnessMethod::Constructive ? graded_witness_constructive(x)
                                                           : graded_witness_oracle(x, c.size_bound);
  return {cert.witness ? 0 : 1, cert.format(), certificate_json(cert)};
}

Output lpa_verdict(const Config& c) {
  const auto spec = load_spec(c);
  VerdictOptions opts;
  opts.degree_bound = c.degree_bound;
  opts.size_bound = c.size_bound;
  opts.samples = c.samples;
  opts.seed = c.seed;
  opts.method = parse_method(c.method);
  const auto rep = graded_vnr_verdict(spec, opts);
  Output out;
  std::ostringstream t;
  Json certs = Json::array();
  for (const auto& cert : rep.certificates) {
    t << cert.format() << "\n";
    certs.push_back(certificate_json(cert));
  }
  t << "algebra: " << spec->describe() << "\n";
  t << "certificates: " << rep.certificates.size() << "\n";
  t << "verdict: " << to_string(rep.verdict) << "\n";
  if (rep.counterexample) t << "counterexample: " << rep.counterexample->format() << "\n";
  out.text = t.str();
  out.json = {{"algebra", spec->describe()}, {"verdict", to_string(rep.verdict)}, {"certificates", certs}};
  if (rep.counterexample) out.json["counterexample"] = rep.counterexample->format();
  out.code = rep.verdict == RegularityVerdict::VerifiedAtBounds ? 0 : 1;
  return out;
}

template <class O>
Output classify_oracle(const O& o, const Config& c) {
  ClassifyOptions opts;
  opts.degree_bound = c.degree_bound;
  opts.size_bound = c.size_bound;
  const auto report = classify(o, opts);
  const auto semi = is_semiprime_graded(o, opts);
  std::string why;
  const bool consistent = chain_consistent(report, &why);
  Output out;
  out.text = report.format();
  out.text += "semiprime: " + to_string(semi.verdict) + (semi.witness.empty() ? "" : " witness " + semi.witness) + "\n";
  out.text += std::string("chain: ") + (consistent ? "consistent" : "violated, " + why) + "\n";
  Json table = Json::object();
  for (const auto& [d, e] : report.epsilon_table) table[std::to_string(d)] = e;
  out.json = {{"ring", report.ring},
              {"strong", verdict_json(report.strong)},
              {"epsilon", verdict_json(report.epsilon)},
              {"nearly", verdict_json(report.nearly)},
              {"symmetric", verdict_json(report.symmetric)},
              {"semiprime", verdict_json(semi)},
              {"epsilon_table", table},
              {"chain_consistent", consistent}};
  out.code = consistent ? 0 : 1;
  return out;
}

Output lpa_classify(const Config& c) {
  if (c.builtin.empty()) return classify_oracle(PathAlgebraOracle(load_spec(c)), c);
  const Ring R = load_ring(c);
  if (c.builtin == "matrix") return classify_oracle(MatrixGradingOracle(R), c);
  if (c.builtin == "truncated") return classify_oracle(TruncatedPolynomialOracle(R, 3), c);
  if (c.builtin == "local-units") return classify_oracle(LocalUnitsSumOracle(R), c);
  if (c.builtin == "trivial") return classify_oracle(TrivialGradingOracle(R), c);
  if (c.builtin == "laurent") {
    std::vector<Elem> id;
    for (Elem a : R.elements()) id.push_back(a);
    return classify_oracle(CornerOracle(csl_make(R, R.one(), id)), c);
  }
  throw ParseError("unknown built-in oracle \"" + c.builtin + "\" (matrix, truncated, local-units, trivial, laurent)");
}

Output lpa_decompose(const Config& c) {
  const auto spec = load_spec(c);
  if (c.element_file.empty()) throw ParseError("--element is required");
  const auto x = element_from_json(spec, load_json(c.element_file));
  const auto image = matricial_decompose(x, c.level);
  if (!(matricial_lift(image) == x)) throw InternalVerificationFailure("lift does not invert decompose");
  Json blocks = Json::array();
  for (const auto& [key, block] : image.blocks()) {
    Json labels = Json::array();
    for (const auto& p : block.labels) labels.push_back(format_path(spec->graph(), p));
    blocks.push_back({{"level", key.level},
                      {"vertex", spec->graph().vertex_name(key.vertex)},
                      {"labels", labels},
                      {"matrix", block.matrix.format()}});
  }
  return {0, image.format(), {{"level", c.level}, {"blocks", blocks}}};
}

Output lpa_iso(const Config& c) {
  const auto spec = load_spec(c);
  const auto phi = cohn_to_leavitt(spec);
  const auto v = verify_graded_iso(phi, c.degree_bound, c.size_bound);
  Json ranks = Json::array();
  for (const auto& r : v.ranks)
    ranks.push_back({{"degree", r.degree}, {"source", r.source_rank}, {"target", r.target_rank}});
  return {v.verdict == Verdict::Fails ? 1 : 0, v.format(),
          {{"verdict", to_string(v.verdict)}, {"ranks", ranks}, {"detail", v.detail}}};
}

Output graph_cover(const Config& c) {
  if (c.graph_file.empty()) throw ParseError("--graph is required");
  const auto file = graph_from_json(load_json(c.graph_file));
  const auto x = file.x ? vertex_set(file.graph, *file.x) : all_regular(file.graph);
  const Graph cover = cohn_cover(file.graph, x);
  const Json j = graph_to_json(cover);
  return {0, j.dump(2) + "\n", j};
}

Output morphism_check(const Config& c) {
  if (c.morphism_file.empty() || c.source_file.empty() || c.target_file.empty())
    throw ParseError("--morphism, --source and --target are required");
  const auto src = graph_from_json(load_json(c.source_file));
  const auto tgt = graph_from_json(load_json(c.target_file));
  const auto psi = morphism_from_json(load_json(c.morphism_file), src.graph, tgt.graph);
  const auto verdict = morphism_validate(psi);
  Output out;
  std::ostringstream t;
  t << "valid: " << (verdict.valid ? "true" : "false") << "\n";
  out.json = {{"valid", verdict.valid}};
  if (!verdict.valid) {
    t << "failed: (" << verdict.failed << ") " << verdict.detail << "\n";
    out.json["failed"] = verdict.failed;
    out.json["detail"] = verdict.detail;
    out.code = 1;
  } else {
    const auto h = induced_hom(psi, load_ring(c));
    const Graph& f = src.graph;
    Json images = Json::object();
    for (VertexId v = 0; v < f.num_vertices(); ++v) {
      t << f.vertex_name(v) << " -> " << h.vertex_images[v].format() << "\n";
      images[f.vertex_name(v)] = h.vertex_images[v].format();
    }
    for (EdgeId e = 0; e < f.num_edges(); ++e) {
      t << f.edge_name(e) << " -> " << h.edge_images[e].format() << "\n";
      t << f.edge_name(e) << "* -> " << h.ghost_images[e].format() << "\n";
      images[f.edge_name(e)] = h.edge_images[e].format();
      images[f.edge_name(e) + "*"] = h.ghost_images[e].format();
    }
    t << "relations: preserved\n";
    out.json["images"] = images;
  }
  out.text = t.str();
  return out;
}

Output corner_witness(const Config& c) {
  if (c.corner_file.empty()) throw ParseError("--corner is required");
  const auto C = corner_from_json(load_json(c.corner_file));
  std::vector<CslElement> targets;
  if (!c.element_file.empty()) {
    targets.push_back(csl_element_from_json(C, load_json(c.element_file)));
  } else {
    const int D = static_cast<int>(c.degree_bound);
    for (int d = -D; d <= D; ++d)
      for (auto& x : csl_component(C, d))
        if (!x.is_zero()) targets.push_back(std::move(x));
  }
  Output out;
  std::ostringstream t;
  Json certs = Json::array();
  std::size_t missing = 0;
  for (const auto& x : targets) {
    const auto w = csl_graded_witness(x);
    t << w.format() << "\n";
    Json j{{"element", x.format()}, {"degree", w.degree}};
    if (w.witness) {
      j["witness"] = w.witness->format();
    } else {
      j["absence"] = w.absence;
      ++missing;
    }
    certs.push_back(j);
  }
  t << "ring: " << C->describe() << "\n";
  t << "elements: " << targets.size() << ", without witness: " << missing << "\n";
  out.text = t.str();
  out.json = {{"ring", C->describe()}, {"certificates", certs}, {"missing", missing}};
  out.code = missing ? 1 : 0;
  return out;
}

// ---------------------------------------------------------------------------
// Built-in fixtures.

struct Fixture {
  std::string name;
  bool (*run)();
};

Graph graph_named(const std::string& name) {
  if (name == "A_1") return Graph({"v"}, {});
  if (name == "v->w") return Graph({"v", "w"}, {{"f", "v", "w"}});
  if (name == "loop") return Graph({"v"}, {{"e", "v", "v"}});
  if (name == "2-cycle") return Graph({"v", "w"}, {{"e", "v", "w"}, {"f", "w", "v"}});
  if (name == "rose") return Graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}});
  if (name == "toeplitz") return Graph({"v", "w"}, {{"e", "v", "v"}, {"f", "v", "w"}});
  return Graph();
}

const Fixture kFixtures[] = {
    {"fields are von Neumann regular (Z/5)", [] { return is_vnr(Ring::modular(5)).regular; }},
    {"A_1 has one sink and no regular vertex",
     [] {
       const auto vc = vertex_classify(graph_named("A_1"));
       return vc.sinks.size() == 1 && vc.regular.empty();
     }},
    {"f f* = v and f* f = w in L(v->w)",
     [] {
       const Graph g = graph_named("v->w");
       const auto L = AlgebraSpec::leavitt(g, Ring::modular(2));
       const auto f = AlgebraElement::edge(L, g.edge("f"));
       return f * f.involution() == AlgebraElement::vertex(L, g.vertex("v")) &&
              f.involution() * f == AlgebraElement::vertex(L, g.vertex("w"));
     }},
    {"matrix grading epsilon table",
     [] {
       const MatrixGradingOracle o(Ring::modular(2));
       const auto r = classify(o);
       return r.epsilon.holds() && r.epsilon_table.at(1) == o.unit(0, 0).format() &&
              r.epsilon_table.at(-1) == o.unit(1, 1).format() &&
              r.epsilon_table.at(0) == Matrix::identity(Ring::modular(2), 2).format() &&
              r.epsilon_table.at(2) == o.zero().format() && r.epsilon_table.at(-2) == o.zero().format();
     }},
    {"strongly graded iff no sinks",
     [] {
       for (const char* n : {"A_1", "v->w", "loop", "2-cycle", "rose", "toeplitz"}) {
         const Graph g = graph_named(n);
         bool no_sinks = true;
         for (VertexId v = 0; v < g.num_vertices(); ++v) no_sinks = no_sinks && !g.is_sink(v);
         const auto v = check_strong(PathAlgebraOracle(AlgebraSpec::leavitt(g, Ring::modular(2))));
         if (v.holds() != no_sinks || v.fails() == no_sinks) return false;
       }
       return true;
     }},
    {"L_Z/4(A_1) is symmetric but not graded regular",
     [] {
       const Graph g = graph_named("A_1");
       const auto L = AlgebraSpec::leavitt(g, Ring::modular(4));
       const auto sym = check_symmetric(PathAlgebraOracle(L));
       const auto cert = graded_witness_oracle(AlgebraElement::vertex(L, 0).scaled(elem(2)), 3);
       return sym.verdict == Verdict::HoldsExactly && !cert.witness && cert.exact;
     }},
    {"null graph gives an empty regularity report",
     [] {
       const auto rep = graded_vnr_verdict(AlgebraSpec::leavitt(Graph(), Ring::modular(2)), {});
       return rep.certificates.empty() && rep.verdict == RegularityVerdict::VerifiedAtBounds;
     }},
    {"Z/2[t, t^-1] is strongly graded",
     [] {
       const Ring R = Ring::modular(2);
       return check_strong(CornerOracle(csl_make(R, R.one(), {elem(0), elem(1)}))).verdict ==
              Verdict::HoldsExactly;
     }},
    {"C^{}(v->w) is graded isomorphic to L(E(X))",
     [] {
       const auto C = AlgebraSpec::cohn(graph_named("v->w"), {}, Ring::modular(2));
       const auto v = verify_graded_iso(cohn_to_leavitt(C));
       return v.verdict == Verdict::HoldsExactly && v.source_total == 5 && v.target_total == 5;
     }},
    {"truncated polynomial grading is not symmetric",
     [] { return check_symmetric(TruncatedPolynomialOracle(Ring::modular(2), 3)).fails(); }},
    {"s-unital direct sum: nearly epsilon-strong, not epsilon-strong",
     [] {
       const LocalUnitsSumOracle o(Ring::modular(2));
       return check_epsilon_strong(o).verdict.fails() && check_nearly_epsilon(o).holds();
     }},
    {"L_Z/6(toeplitz) is graded von Neumann regular at bounds",
     [] {
       const auto rep = graded_vnr_verdict(AlgebraSpec::leavitt(graph_named("toeplitz"), Ring::modular(6)), {});
       return rep.verdict == RegularityVerdict::VerifiedAtBounds;
     }},
    {"radical of L_Z/2(A_1) is zero",
     [] {
       return jacobson_radical_algebra(AlgebraSpec::leavitt(graph_named("A_1"), Ring::modular(2))).elements.size() ==
              1;
     }},
    {"Z/4[t, t^-1]: 2 t+ has no witness",
     [] {
       const Ring R = Ring::modular(4);
       std::vector<Elem> id;
       for (Elem a : R.elements()) id.push_back(a);
       const auto C = csl_make(R, R.one(), id);
       const auto w = csl_graded_witness(CslElement::term(C, 1, elem(2)));
       return !w.witness && w.exact;
     }},
};

Output examples(const Config&) {
  Output out;
  std::ostringstream t;
  Json results = Json::array();
  for (const auto& f : kFixtures) {
    bool ok = false;
    std::string error;
    try {
      ok = f.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    t << (ok ? "PASS " : "FAIL ") << f.name << (error.empty() ? "" : " (" + error + ")") << "\n";
    results.push_back({{"name", f.name}, {"pass", ok}});
    if (!ok) out.code = 1;
  }
  out.text = t.str();
  out.json = {{"fixtures", results}};
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded regularity and grading classification for path algebras over finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--degree-bound", c.degree_bound, "Largest |degree| examined")->capture_default_str();
  app.add_option("--size-bound", c.size_bound, "Path length / filtration bound")->capture_default_str();
  app.add_option("--samples", c.samples, "Random homogeneous elements per verdict")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed for random sampling")->capture_default_str();
  app.add_option("--method", c.method, "Witness method: constructive or oracle");
  app.add_flag("--json", c.json, "Machine-readable output");

  Output (*handler)(const Config&) = nullptr;
  auto on = [&](CLI::App* sub, Output (*h)(const Config&)) { sub->callback([&handler, h] { handler = h; }); };

  auto* ring_cmd = app.add_subcommand("check-ring", "Regularity, radical and semiprimeness of a ring");
  ring_cmd->add_option("ring", c.ring_file, "Ring spec file")->required();
  on(ring_cmd, check_ring);

  auto* lpa = app.add_subcommand("lpa", "Path algebra commands");
  lpa->require_subcommand(1);
  auto add_algebra = [&](CLI::App* sub, bool graph_required) {
    auto* g = sub->add_option("--graph", c.graph_file, "Graph file");
    if (graph_required) g->required();
    sub->add_option("--ring", c.ring_file, "Ring spec file (default Z/2)");
  };
  auto* witness = lpa->add_subcommand("witness", "Graded witness for one homogeneous element");
  add_algebra(witness, true);
  witness->add_option("--element", c.element_file, "Element file")->required();
  on(witness, lpa_witness);
  auto* verdict = lpa->add_subcommand("verdict", "Graded regularity over bounded spanning elements");
  add_algebra(verdict, true);
  on(verdict, lpa_verdict);
  auto* cls = lpa->add_subcommand("classify", "Strong / epsilon / nearly epsilon / symmetric classification");
  add_algebra(cls, false);
  cls->add_option("--builtin", c.builtin, "Built-in oracle: matrix, truncated, local-units, trivial, laurent");
  on(cls, lpa_classify);
  auto* dec = lpa->add_subcommand("decompose", "Matricial image of a degree-0 element");
  add_algebra(dec, true);
  dec->add_option("--element", c.element_file, "Element file")->required();
  dec->add_option("--level", c.level, "Filtration level n")->required();
  on(dec, lpa_decompose);
  auto* iso = lpa->add_subcommand("iso", "Check the Cohn-to-Leavitt graded isomorphism");
  add_algebra(iso, true);
  on(iso, lpa_iso);

  auto* graph = app.add_subcommand("graph", "Graph commands");
  graph->require_subcommand(1);
  auto* cover = graph->add_subcommand("cover", "Print E(X)");
  cover->add_option("--graph", c.graph_file, "Graph file with optional x")->required();
  on(cover, graph_cover);

  auto* morphism = app.add_subcommand("morphism", "Graph morphism commands");
  morphism->require_subcommand(1);
  auto* mcheck = morphism->add_subcommand("check", "Validate a morphism and print the induced hom");
  mcheck->add_option("--morphism", c.morphism_file, "Morphism file")->required();
  mcheck->add_option("--source", c.source_file, "Source graph file")->required();
  mcheck->add_option("--target", c.target_file, "Target graph file")->required();
  mcheck->add_option("--ring", c.ring_file, "Ring spec file (default Z/2)");
  on(mcheck, morphism_check);

  auto* corner = app.add_subcommand("corner", "Corner skew Laurent rings");
  corner->require_subcommand(1);
  auto* cw = corner->add_subcommand("witness", "Graded witnesses in a corner skew Laurent ring");
  cw->add_option("--corner", c.corner_file, "Corner spec file")->required();
  cw->add_option("--element", c.element_file, "Element file (default: every element with |degree| <= bound)");
  on(cw, corner_witness);

  auto* ex = app.add_subcommand("examples", "Run the built-in fixtures");
  on(ex, examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    const Output out = handler(c);
    std::cout << (c.json ? out.json.dump(2) + "\n" : out.text);
    return out.code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
