#pragma once

// Shared fixtures and independent reference implementations for the tests.
// The reference code below is deliberately naive and shares nothing with the
// library beyond the Graph type.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gral/graph.hpp"
#include "gral/pathalg.hpp"

namespace fixtures {

using gral::Graph;

inline Graph a1() { return Graph({"v"}, {}); }
inline Graph v_to_w() { return Graph({"v", "w"}, {{"f", "v", "w"}}); }
inline Graph loop() { return Graph({"v"}, {{"e", "v", "v"}}); }
inline Graph two_cycle() { return Graph({"v", "w"}, {{"e", "v", "w"}, {"f", "w", "v"}}); }
inline Graph rose() { return Graph({"v"}, {{"e", "v", "v"}, {"f", "v", "v"}}); }
inline Graph toeplitz() { return Graph({"v", "w"}, {{"e", "v", "v"}, {"f", "v", "w"}}); }
inline Graph line3() { return Graph({"u", "v", "w"}, {{"f", "v", "w"}, {"g", "w", "u"}}); }

struct Named {
  std::string name;
  Graph graph;
};

inline std::vector<Named> six_graphs() {
  return {{"A_1", a1()}, {"v->w", v_to_w()}, {"loop", loop()},
          {"2-cycle", two_cycle()}, {"rose", rose()}, {"toeplitz", toeplitz()}};
}

/// Random generator word of length 1 to 6; mostly zero or non-composable.
inline gral::Word random_word(const gral::AlgebraSpec& spec, std::mt19937_64& rng) {
  using gral::Letter;
  const Graph& g = spec.graph();
  const std::size_t len = 1 + rng() % 6;
  gral::Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t pick = rng() % (g.num_vertices() + 2 * g.num_edges());
    if (pick < g.num_vertices())
      w.push_back({Letter::Kind::Vertex, static_cast<std::uint32_t>(pick)});
    else if (pick < g.num_vertices() + g.num_edges())
      w.push_back({Letter::Kind::Real, static_cast<std::uint32_t>(pick - g.num_vertices())});
    else
      w.push_back({Letter::Kind::Ghost, static_cast<std::uint32_t>(pick - g.num_vertices() - g.num_edges())});
  }
  return w;
}

}  // namespace fixtures

namespace ref {

using gral::EdgeId;
using gral::Graph;
using gral::VertexId;

/// Every edge sequence of length n, by depth-first extension.
inline std::vector<std::vector<EdgeId>> edge_paths(const Graph& g, std::size_t n) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> cur;
  std::function<void()> extend = [&] {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (cur.empty() || g.range(cur.back()) == g.source(e)) {
        cur.push_back(e);
        extend();
        cur.pop_back();
      }
  };
  if (n > 0) extend();
  return out;
}

inline std::size_t count_paths(const Graph& g, std::size_t n, VertexId v) {
  if (n == 0) return 1;
  std::size_t c = 0;
  for (const auto& p : edge_paths(g, n)) c += g.range(p.back()) == v ? 1 : 0;
  return c;
}

/// sum over i < n and sinks v of |P(i,v)|^2, plus sum over v of |P(n,v)|^2.
inline std::size_t dn_rank(const Graph& g, std::size_t n) {
  std::size_t r = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.out_edges(v).empty())
      for (std::size_t i = 0; i < n; ++i) r += count_paths(g, i, v) * count_paths(g, i, v);
    const auto k = count_paths(g, n, v);
    r += k * k;
  }
  return r;
}

/// Naive path algebra over Z/n: a monomial is (vertex, alpha edges, beta
/// edges) with r(alpha) = r(beta) = vertex when both are empty.
struct Mono {
  VertexId vertex;  // r(alpha); for vertex monomials the vertex itself
  std::vector<EdgeId> alpha;
  std::vector<EdgeId> beta;
  auto operator<=>(const Mono&) const = default;
};

struct Algebra {
  Graph g;
  std::vector<char> in_x;
  std::uint32_t n;

  Algebra(Graph graph, std::vector<VertexId> x, std::uint32_t modulus) : g(std::move(graph)), n(modulus) {
    in_x.assign(g.num_vertices(), 0);
    for (VertexId v : x) in_x[v] = 1;
  }

  using Elt = std::map<Mono, std::uint32_t>;

  VertexId start(const std::vector<EdgeId>& p, VertexId end) const { return p.empty() ? end : g.source(p.front()); }

  EdgeId least_out(VertexId v) const {
    EdgeId best = g.num_edges();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (g.source(e) == v && (best == g.num_edges() || g.edge_name(e) < g.edge_name(best))) best = e;
    return best;
  }

  void add(Elt& x, const Mono& m, std::uint32_t c) const {
    c %= n;
    if (c == 0) return;
    // Reduce alpha f (beta f)* at a special edge f.
    if (!m.alpha.empty() && !m.beta.empty() && m.alpha.back() == m.beta.back()) {
      const EdgeId f = m.alpha.back();
      const VertexId u = g.source(f);
      if (in_x[u] && least_out(u) == f) {
        Mono base{u, {m.alpha.begin(), m.alpha.end() - 1}, {m.beta.begin(), m.beta.end() - 1}};
        add(x, base, c);
        for (EdgeId h = 0; h < g.num_edges(); ++h)
          if (g.source(h) == u && h != f) {
            Mono t{g.range(h), base.alpha, base.beta};
            t.alpha.push_back(h);
            t.beta.push_back(h);
            add(x, t, n - c);
          }
        return;
      }
    }
    auto& slot = x[m];
    slot = (slot + c) % n;
    if (slot == 0) x.erase(m);
  }

  Elt mul(const Elt& a, const Elt& b) const {
    Elt out;
    for (const auto& [m1, c1] : a)
      for (const auto& [m2, c2] : b) {
        // beta1* gamma2 with beta1 = m1.beta, gamma2 = m2.alpha
        const auto& be = m1.beta;
        const auto& ga = m2.alpha;
        const VertexId sb = start(be, m1.vertex), sg = start(ga, m2.vertex);
        if (sb != sg) continue;
        const std::size_t k = std::min(be.size(), ga.size());
        if (!std::equal(be.begin(), be.begin() + static_cast<long>(k), ga.begin())) continue;
        Mono r;
        if (ga.size() >= be.size()) {
          r.alpha = m1.alpha;
          r.alpha.insert(r.alpha.end(), ga.begin() + static_cast<long>(k), ga.end());
          r.beta = m2.beta;
          r.vertex = m2.vertex;
        } else {
          r.alpha = m1.alpha;
          r.beta = m2.beta;
          r.beta.insert(r.beta.end(), be.begin() + static_cast<long>(k), be.end());
          r.vertex = m1.vertex;
        }
        add(out, r, c1 * c2);
      }
    return out;
  }

  Elt plus(const Elt& a, const Elt& b) const {
    Elt out = a;
    for (const auto& [m, c] : b) add(out, m, c);
    return out;
  }

  Elt letter(const gral::Letter& l) const {
    using K = gral::Letter::Kind;
    Elt out;
    if (l.kind == K::Vertex) add(out, Mono{l.id, {}, {}}, 1);
    else if (l.kind == K::Real) add(out, Mono{g.range(l.id), {l.id}, {}}, 1);
    else add(out, Mono{g.range(l.id), {}, {l.id}}, 1);
    return out;
  }

  /// Product of the letters of a word, left to right.
  Elt word(const gral::Word& w, std::uint32_t c) const {
    Elt out = letter(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) out = mul(out, letter(w[i]));
    Elt scaled;
    for (const auto& [m, k] : out) add(scaled, m, k * c);
    return scaled;
  }

  /// Converts a library element of a Z/n algebra.
  Elt from(const gral::AlgebraElement& x) const {
    Elt out;
    for (const auto& [m, c] : x.terms())
      add(out, Mono{m.alpha.range(g), m.alpha.edges, m.beta.edges}, gral::index(c));
    return out;
  }

  /// Reduced monomials of a degree with both lengths at most len.
  std::vector<Mono> reduced(std::size_t len, int degree) const {
    std::vector<Mono> out;
    for (std::size_t la = 0; la <= len; ++la) {
      const long lb = static_cast<long>(la) - degree;
      if (lb < 0 || lb > static_cast<long>(len)) continue;
      auto as = la == 0 ? std::vector<std::vector<EdgeId>>{} : edge_paths(g, la);
      auto bs = lb == 0 ? std::vector<std::vector<EdgeId>>{} : edge_paths(g, static_cast<std::size_t>(lb));
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::vector<EdgeId>> A, B;
        if (la == 0) A.push_back({}); else for (auto& p : as) if (g.range(p.back()) == v) A.push_back(p);
        if (lb == 0) B.push_back({}); else for (auto& p : bs) if (g.range(p.back()) == v) B.push_back(p);
        for (auto& a : A)
          for (auto& b : B) {
            Mono m{v, a, b};
            Elt probe;
            add(probe, m, 1);
            if (probe.size() == 1 && probe.begin()->first == m) out.push_back(m);
          }
      }
    }
    return out;
  }

  /// Exhaustive: is there b in the span of the given monomials with x b x = x?
  bool has_witness(const Elt& x, const std::vector<Mono>& span) const {
    std::vector<std::uint32_t> coeff(span.size(), 0);
    while (true) {
      Elt b;
      for (std::size_t i = 0; i < span.size(); ++i) add(b, span[i], coeff[i]);
      if (mul(mul(x, b), x) == x) return true;
      std::size_t i = 0;
      while (i < coeff.size() && ++coeff[i] == n) coeff[i++] = 0;
      if (i == coeff.size()) return false;
    }
  }
};

}  // namespace ref
