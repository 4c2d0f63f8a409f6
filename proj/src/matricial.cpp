#include "gral/matricial.hpp"

#include <algorithm>

namespace gral {

MatricialImage::MatricialImage(SpecPtr spec, std::size_t n) : spec_(std::move(spec)), n_(n) {
  const Graph& g = spec_->graph();
  const Ring& R = spec_->ring();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t i = 0; i <= n; ++i) {
      if (i < n && !g.is_sink(v)) continue;
      auto labels = paths(g, i, v);
      if (labels.empty()) continue;
      const std::size_t k = labels.size();
      blocks_.emplace(BlockKey{i, v}, MatrixBlock{std::move(labels), Matrix(R, k, k)});
    }
  }
}

MatricialImage MatricialImage::identity(SpecPtr spec, std::size_t n) {
  MatricialImage out(std::move(spec), n);
  for (auto& [key, block] : out.blocks_) block.matrix = Matrix::identity(out.spec_->ring(), block.labels.size());
  return out;
}

void MatricialImage::check_same(const MatricialImage& o) const {
  if (spec_ != o.spec_ || n_ != o.n_) throw SpecMismatch("matricial images of different D_n");
}

MatricialImage MatricialImage::operator+(const MatricialImage& o) const {
  check_same(o);
  MatricialImage out = *this;
  for (auto& [key, block] : out.blocks_) block.matrix = block.matrix + o.blocks_.at(key).matrix;
  return out;
}

MatricialImage MatricialImage::operator-(const MatricialImage& o) const {
  check_same(o);
  MatricialImage out = *this;
  for (auto& [key, block] : out.blocks_) block.matrix = block.matrix - o.blocks_.at(key).matrix;
  return out;
}

MatricialImage MatricialImage::operator*(const MatricialImage& o) const {
  check_same(o);
  MatricialImage out = *this;
  for (auto& [key, block] : out.blocks_) block.matrix = block.matrix * o.blocks_.at(key).matrix;
  return out;
}

bool MatricialImage::operator==(const MatricialImage& o) const {
  if (spec_ != o.spec_ || n_ != o.n_) return false;
  for (const auto& [key, block] : blocks_)
    if (!(block.matrix == o.blocks_.at(key).matrix)) return false;
  return true;
}

bool MatricialImage::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) { return kv.second.matrix.is_zero(); });
}

std::string MatricialImage::format() const {
  const Graph& g = spec_->graph();
  const Ring& R = spec_->ring();
  std::string out;
  for (const auto& [key, block] : blocks_) {
    const auto& m = block.matrix;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j) == R.zero()) continue;
        out += "(" + std::to_string(key.level) + "," + g.vertex_name(key.vertex) + ") " +
               format_path(g, block.labels[i]) + "," + format_path(g, block.labels[j]) + ": " +
               R.format(m.at(i, j)) + "\n";
      }
  }
  return out;
}

namespace {

std::size_t label_index(const std::vector<Path>& labels, const Path& p) {
  auto it = std::lower_bound(labels.begin(), labels.end(), p);
  if (it == labels.end() || !(*it == p)) throw InternalVerificationFailure("path missing from block labels");
  return static_cast<std::size_t>(it - labels.begin());
}

// Places c * alpha beta* into the image, expanding v = sum ff* at regular
// range vertices until the real part has length n or ends at a sink.
void place(MatricialImage& img, const Path& alpha, const Path& beta, Elem c) {
  const Graph& g = img.spec()->graph();
  const Ring& R = img.spec()->ring();
  const VertexId u = alpha.range(g);
  const std::size_t len = alpha.length();
  if (len == img.level() || g.is_sink(u)) {
    auto& block = img.blocks().at(BlockKey{len, u});
    const std::size_t i = label_index(block.labels, alpha);
    const std::size_t j = label_index(block.labels, beta);
    block.matrix.at(i, j) = R.add(block.matrix.at(i, j), c);
    return;
  }
  for (EdgeId f : g.out_edges(u)) {
    Path a = alpha, b = beta;
    a.edges.push_back(f);
    b.edges.push_back(f);
    place(img, a, b, c);
  }
}

}  // namespace

MatricialImage matricial_decompose(const AlgebraElement& x, std::size_t n) {
  const SpecPtr& spec = x.spec();
  if (!spec->is_leavitt()) throw PreconditionViolation("matricial decomposition needs a Leavitt spec");
  const std::size_t level = filtration_level(x);
  if (level > n)
    throw NotInDn("element has filtration level " + std::to_string(level) + " > " + std::to_string(n));
  MatricialImage img(spec, n);
  for (const auto& [m, c] : x.terms()) place(img, m.alpha, m.beta, c);
  return img;
}

AlgebraElement matricial_lift(const MatricialImage& image) {
  const Ring& R = image.spec()->ring();
  AlgebraElement out(image.spec());
  for (const auto& [key, block] : image.blocks()) {
    const auto& m = block.matrix;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != R.zero()) out.add_term(block.labels[i], block.labels[j], m.at(i, j));
  }
  return out;
}

std::size_t dn_rank_formula(const Graph& g, std::size_t n) {
  std::size_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (std::size_t i = 0; i < n; ++i)
      if (g.is_sink(v)) {
        const std::size_t k = paths(g, i, v).size();
        total += k * k;
      }
    const std::size_t k = paths(g, n, v).size();
    total += k * k;
  }
  return total;
}

std::size_t dn_rank_reduced_basis(const AlgebraSpec& spec, std::size_t n) {
  return reduced_monomials(spec, n, 0).size();
}

}  // namespace gral
