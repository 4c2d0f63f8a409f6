#include "gral/pathalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gral {

AlgebraSpec::AlgebraSpec(Graph graph, std::vector<VertexId> x, Ring ring)
    : graph_(std::move(graph)), ring_(std::move(ring)) {
  GraphObject obj(graph_, std::move(x));
  x_ = obj.x;
  in_x_.assign(graph_.num_vertices(), 0);
  for (VertexId v : x_) in_x_[v] = 1;
  special_.assign(graph_.num_edges(), 0);
  for (VertexId v : x_) special_[graph_.out_edges(v).front()] = 1;
  leavitt_ = x_ == all_regular(graph_);
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::leavitt(Graph graph, Ring ring) {
  auto x = all_regular(graph);
  return std::make_shared<const AlgebraSpec>(std::move(graph), std::move(x), std::move(ring));
}

std::shared_ptr<const AlgebraSpec> AlgebraSpec::cohn(Graph graph, std::vector<VertexId> x, Ring ring) {
  return std::make_shared<const AlgebraSpec>(std::move(graph), std::move(x), std::move(ring));
}

std::optional<EdgeId> AlgebraSpec::special_edge(VertexId v) const {
  if (!in_x(v)) return std::nullopt;
  return graph_.out_edges(v).front();
}

std::string AlgebraSpec::describe() const {
  std::string out = (leavitt_ ? "L_" : "C^X_") + ring_.describe() + "(";
  out += std::to_string(graph_.num_vertices()) + "v," + std::to_string(graph_.num_edges()) + "e";
  if (!leavitt_) {
    out += ";X={";
    for (std::size_t i = 0; i < x_.size(); ++i) out += (i ? "," : "") + graph_.vertex_name(x_[i]);
    out += "}";
  }
  return out + ")";
}

bool is_reduced(const AlgebraSpec& spec, const Monomial& m) {
  if (m.alpha.is_vertex() || m.beta.is_vertex()) return true;
  const EdgeId f = m.alpha.edges.back();
  return !(f == m.beta.edges.back() && spec.is_special(f));
}

AlgebraElement::AlgebraElement(SpecPtr spec) : spec_(std::move(spec)) {}

AlgebraElement AlgebraElement::vertex(const SpecPtr& spec, VertexId v) {
  return monomial(spec, Path::vertex(v), Path::vertex(v), spec->ring().one());
}

AlgebraElement AlgebraElement::edge(const SpecPtr& spec, EdgeId e) {
  const Graph& g = spec->graph();
  return monomial(spec, make_path(g, {e}), Path::vertex(g.range(e)), spec->ring().one());
}

AlgebraElement AlgebraElement::ghost(const SpecPtr& spec, EdgeId e) {
  const Graph& g = spec->graph();
  return monomial(spec, Path::vertex(g.range(e)), make_path(g, {e}), spec->ring().one());
}

AlgebraElement AlgebraElement::monomial(const SpecPtr& spec, const Path& alpha, const Path& beta,
                                        Elem coeff) {
  if (alpha.range(spec->graph()) != beta.range(spec->graph()))
    throw PreconditionViolation("monomial requires r(alpha) = r(beta)");
  AlgebraElement x(spec);
  x.add_term(alpha, beta, coeff);
  return x;
}

AlgebraElement AlgebraElement::identity(const SpecPtr& spec) {
  AlgebraElement x(spec);
  for (VertexId v = 0; v < spec->graph().num_vertices(); ++v)
    x.add_term(Path::vertex(v), Path::vertex(v), spec->ring().one());
  return x;
}

void AlgebraElement::add_term(const Path& alpha, const Path& beta, Elem coeff) {
  const Ring& R = spec_->ring();
  if (coeff == R.zero()) return;
  Monomial m{alpha, beta};
  if (!is_reduced(*spec_, m)) {
    // alpha0 f (beta0 f)* = alpha0 beta0* - sum_{g != f} alpha0 g (beta0 g)*
    const EdgeId f = alpha.edges.back();
    Path a0 = alpha;
    Path b0 = beta;
    a0.edges.pop_back();
    b0.edges.pop_back();
    const Elem minus = R.neg(coeff);
    for (EdgeId g : spec_->graph().out_edges(spec_->graph().source(f))) {
      if (g == f) continue;
      Path ag = a0, bg = b0;
      ag.edges.push_back(g);
      bg.edges.push_back(g);
      add_term(ag, bg, minus);
    }
    add_term(a0, b0, coeff);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second = R.add(it->second, coeff);
    if (it->second == R.zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
  if (spec_ != o.spec_) throw SpecMismatch("elements belong to different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  out += o;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same(o);
  const Ring& R = spec_->ring();
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = R.add(it->second, c);
      if (it->second == R.zero()) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(spec_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, spec_->ring().neg(c));
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

namespace {

// (alpha beta*)(gamma delta*) before reduction; nullopt when it vanishes.
std::optional<Monomial> raw_product(const Monomial& a, const Monomial& b) {
  if (is_prefix(a.beta, b.alpha)) {
    Path kappa{0, {b.alpha.edges.begin() + static_cast<std::ptrdiff_t>(a.beta.length()), b.alpha.edges.end()}};
    return Monomial{concat(a.alpha, kappa), b.beta};
  }
  if (is_prefix(b.alpha, a.beta)) {
    Path sigma{0, {a.beta.edges.begin() + static_cast<std::ptrdiff_t>(b.alpha.length()), a.beta.edges.end()}};
    return Monomial{a.alpha, concat(b.beta, sigma)};
  }
  return std::nullopt;
}

}  // namespace

AlgebraElement monomial_product(const SpecPtr& spec, const Monomial& a, const Monomial& b) {
  AlgebraElement out(spec);
  if (auto m = raw_product(a, b)) out.add_term(m->alpha, m->beta, spec->ring().one());
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_same(o);
  const Ring& R = spec_->ring();
  AlgebraElement out(spec_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      if (auto m = raw_product(ma, mb)) out.add_term(m->alpha, m->beta, R.mul(ca, cb));
  return out;
}

AlgebraElement AlgebraElement::scaled(Elem r) const {
  AlgebraElement out(spec_);
  for (const auto& [m, c] : terms_) out.add_term(m.alpha, m.beta, spec_->ring().mul(r, c));
  return out;
}

AlgebraElement AlgebraElement::scaled_right(Elem r) const {
  AlgebraElement out(spec_);
  for (const auto& [m, c] : terms_) out.add_term(m.alpha, m.beta, spec_->ring().mul(c, r));
  return out;
}

AlgebraElement AlgebraElement::involution() const {
  AlgebraElement out(spec_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.beta, m.alpha}, c);
  return out;
}

std::map<int, AlgebraElement> AlgebraElement::homogeneous_components() const {
  std::map<int, AlgebraElement> out;
  for (const auto& [m, c] : terms_) {
    auto it = out.try_emplace(m.degree(), spec_).first;
    it->second.terms_.emplace(m, c);
  }
  return out;
}

bool AlgebraElement::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<int> AlgebraElement::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return spec_ == o.spec_ && terms_ == o.terms_;
}

std::string format_monomial(const Graph& g, const Monomial& m) {
  if (m.alpha.is_vertex() && m.beta.is_vertex()) return g.vertex_name(m.alpha.start);
  std::string out;
  for (EdgeId e : m.alpha.edges) {
    if (!out.empty()) out += ".";
    out += g.edge_name(e);
  }
  for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) {
    if (!out.empty()) out += ".";
    out += g.edge_name(*it) + "*";
  }
  return out;
}

std::string AlgebraElement::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  const Ring& R = spec_->ring();
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != R.one()) out += R.format(c) + " ";
    out += format_monomial(spec_->graph(), m);
  }
  return out;
}

std::vector<Monomial> reduced_monomials(const AlgebraSpec& spec, std::size_t max_len,
                                        std::optional<int> degree) {
  const Graph& g = spec.graph();
  std::vector<std::vector<Path>> ending(g.num_vertices());
  for (const auto& p : paths_up_to(g, max_len)) ending[p.range(g)].push_back(p);
  std::vector<Monomial> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (const auto& a : ending[v])
      for (const auto& b : ending[v]) {
        Monomial m{a, b};
        if (degree && m.degree() != *degree) continue;
        if (is_reduced(spec, m)) out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t filtration_level(const AlgebraElement& x) {
  std::size_t level = 0;
  for (const auto& [m, c] : x.terms()) {
    if (m.degree() != 0) throw NotDegreeZero("element has a term of degree " + std::to_string(m.degree()));
    level = std::max(level, m.alpha.length());
  }
  return level;
}

// ---------------------------------------------------------------------------

Word parse_word(const AlgebraSpec& spec, const std::string& text) {
  const Graph& g = spec.graph();
  Word w;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const bool ghost = token.size() > 1 && token.back() == '*';
    const std::string name = ghost ? token.substr(0, token.size() - 1) : token;
    if (auto e = g.find_edge(name)) {
      w.push_back({ghost ? Letter::Kind::Ghost : Letter::Kind::Real, *e});
    } else if (auto v = g.find_vertex(name); v && !ghost) {
      w.push_back({Letter::Kind::Vertex, *v});
    } else {
      throw UnknownGenerator("unknown generator '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '.' || ch == '\t') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  if (w.empty()) throw UnknownGenerator("empty word");
  return w;
}

std::string format_word(const AlgebraSpec& spec, const Word& w) {
  const Graph& g = spec.graph();
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += " ";
    switch (l.kind) {
      case Letter::Kind::Vertex: out += g.vertex_name(l.id); break;
      case Letter::Kind::Real: out += g.edge_name(l.id); break;
      case Letter::Kind::Ghost: out += g.edge_name(l.id) + "*"; break;
    }
  }
  return out;
}

namespace {

using Kind = Letter::Kind;

struct Replacement {
  std::int64_t sign;
  Word piece;
};

// Rewrites of an adjacent letter pair. Returns nullopt when (a, b) is not a
// redex; an empty vector means the pair is zero.
std::optional<std::vector<Replacement>> rewrite_pair(const AlgebraSpec& spec, Letter a, Letter b) {
  const Graph& g = spec.graph();
  auto keep = [](Letter l) { return std::vector<Replacement>{{1, Word{l}}}; };
  auto zero = [] { return std::vector<Replacement>{}; };
  if (a.kind == Kind::Vertex) {
    switch (b.kind) {
      case Kind::Vertex: return a.id == b.id ? keep(a) : zero();
      case Kind::Real: return a.id == g.source(b.id) ? keep(b) : zero();
      case Kind::Ghost: return a.id == g.range(b.id) ? keep(b) : zero();
    }
  }
  if (b.kind == Kind::Vertex) {
    if (a.kind == Kind::Real) return g.range(a.id) == b.id ? keep(a) : zero();
    return g.source(a.id) == b.id ? keep(a) : zero();
  }
  if (a.kind == Kind::Ghost && b.kind == Kind::Real)
    return a.id == b.id ? keep(Letter{Kind::Vertex, g.range(a.id)}) : zero();
  if (a.kind == Kind::Real && b.kind == Kind::Real) {
    if (g.range(a.id) != g.source(b.id)) return zero();
    return std::nullopt;
  }
  if (a.kind == Kind::Ghost && b.kind == Kind::Ghost) {
    // f* g* = (g f)*
    if (g.range(b.id) != g.source(a.id)) return zero();
    return std::nullopt;
  }
  // Real then ghost.
  if (g.range(a.id) != g.range(b.id)) return zero();
  if (a.id == b.id && spec.is_special(a.id)) {
    const VertexId v = g.source(a.id);
    std::vector<Replacement> out{{1, Word{Letter{Kind::Vertex, v}}}};
    for (EdgeId f : g.out_edges(v))
      if (f != a.id) out.push_back({-1, Word{Letter{Kind::Real, f}, Letter{Kind::Ghost, f}}});
    return out;
  }
  return std::nullopt;
}

std::vector<std::size_t> redexes(const AlgebraSpec& spec, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rewrite_pair(spec, w[i], w[i + 1])) out.push_back(i);
  return out;
}

Monomial word_to_monomial(const Graph& g, const Word& w) {
  if (w.size() == 1 && w[0].kind == Kind::Vertex) return {Path::vertex(w[0].id), Path::vertex(w[0].id)};
  std::vector<EdgeId> real, ghost;
  for (const auto& l : w) (l.kind == Kind::Real ? real : ghost).push_back(l.id);
  std::reverse(ghost.begin(), ghost.end());
  Path alpha = real.empty() ? Path{} : make_path(g, real);
  Path beta = ghost.empty() ? Path{} : make_path(g, ghost);
  if (real.empty()) alpha = Path::vertex(beta.range(g));
  if (ghost.empty()) beta = Path::vertex(alpha.range(g));
  return {alpha, beta};
}

}  // namespace

AlgebraElement normal_form(const SpecPtr& spec, const std::vector<RawTerm>& raw, Strategy strategy,
                           std::uint64_t seed) {
  const Ring& R = spec->ring();
  std::map<Word, Elem> pending;
  auto accumulate = [&](const Word& w, Elem c) {
    if (c == R.zero()) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (!inserted) {
      it->second = R.add(it->second, c);
      if (it->second == R.zero()) pending.erase(it);
    }
  };
  for (const auto& t : raw) {
    if (t.word.empty()) throw UnknownGenerator("empty word");
    accumulate(t.word, t.coeff);
  }
  std::mt19937_64 rng(seed);
  AlgebraElement out(spec);
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > 10'000'000) throw InternalVerificationFailure("rewriting did not terminate");
    auto it = pending.begin();
    if (strategy == Strategy::Randomized) std::advance(it, static_cast<std::ptrdiff_t>(rng() % pending.size()));
    const Word w = it->first;
    const Elem c = it->second;
    const auto positions = redexes(*spec, w);
    if (positions.empty()) {
      pending.erase(it);
      const Monomial m = word_to_monomial(spec->graph(), w);
      out.add_term(m.alpha, m.beta, c);
      continue;
    }
    const std::size_t pos =
        strategy == Strategy::Randomized ? positions[rng() % positions.size()] : positions.front();
    pending.erase(it);
    const auto reps = rewrite_pair(*spec, w[pos], w[pos + 1]);
    for (const auto& rep : *reps) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rep.piece.begin(), rep.piece.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
      accumulate(nw, R.mul(R.from_int(rep.sign), c));
    }
  }
  return out;
}

}  // namespace gral
