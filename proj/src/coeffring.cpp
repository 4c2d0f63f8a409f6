#include "gral/coeffring.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "gral/linsolve.hpp"

namespace gral {

std::size_t default_search_cap() {
  static const std::size_t cap = [] {
    if (const char* env = std::getenv("GRAL_SEARCH_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1'000'000);
  }();
  return cap;
}

RingSpec RingSpec::modular(std::uint32_t n) {
  RingSpec s;
  s.kind = Kind::Modular;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  return s;
}

RingSpec RingSpec::table(std::uint32_t size, std::uint32_t zero, std::uint32_t one,
                         std::vector<std::vector<std::uint32_t>> add,
                         std::vector<std::vector<std::uint32_t>> mul) {
  RingSpec s;
  s.kind = Kind::Table;
  s.size = size;
  s.zero = zero;
  s.one = one;
  s.add = std::move(add);
  s.mul = std::move(mul);
  return s;
}

struct Ring::Impl {
  RingSpec spec;
  std::uint32_t order = 0;
  std::vector<Ring> factors;
  std::vector<std::uint32_t> stride;
  Elem zero{};
  Elem one{};
  bool commutative = true;
  bool crt = true;
  // Flattened order x order tables; filled for table rings and for small
  // products.
  std::vector<std::uint32_t> add_tab;
  std::vector<std::uint32_t> mul_tab;
  std::vector<std::uint32_t> neg_tab;

  Elem raw_add(Elem a, Elem b) const;
  Elem raw_mul(Elem a, Elem b) const;
  Elem raw_neg(Elem a) const;
  std::vector<Elem> split(Elem a) const;
  Elem join(std::span<const Elem> parts) const;
};

namespace {

constexpr std::uint32_t kTabulateLimit = 256;

std::string triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

void validate_table(const RingSpec& s) {
  const std::uint32_t k = s.size;
  if (k == 0) throw AxiomViolation("nonempty", "size 0");
  if (s.zero >= k || s.one >= k) throw AxiomViolation("designated elements", "out of range");
  auto check_shape = [k](const auto& t, const char* name) {
    if (t.size() != k) throw AxiomViolation(std::string("total ") + name, "row count");
    for (std::uint32_t i = 0; i < k; ++i) {
      if (t[i].size() != k) throw AxiomViolation(std::string("total ") + name, "row " + std::to_string(i));
      for (std::uint32_t j = 0; j < k; ++j)
        if (t[i][j] >= k)
          throw AxiomViolation(std::string("closed ") + name,
                               "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  };
  check_shape(s.add, "add");
  check_shape(s.mul, "mul");
  const auto& A = s.add;
  const auto& M = s.mul;
  for (std::uint32_t a = 0; a < k; ++a) {
    if (A[s.zero][a] != a || A[a][s.zero] != a) throw AxiomViolation("additive identity", std::to_string(a));
    bool has_neg = false;
    for (std::uint32_t b = 0; b < k; ++b) {
      if (A[a][b] != A[b][a])
        throw AxiomViolation("add commutative", "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (A[a][b] == s.zero) has_neg = true;
    }
    if (!has_neg) throw AxiomViolation("additive inverse", std::to_string(a));
    if (M[s.one][a] != a || M[a][s.one] != a) throw AxiomViolation("multiplicative identity", std::to_string(a));
  }
  if (k > 1 && s.one == s.zero) throw AxiomViolation("one != zero", std::to_string(s.one));
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b)
      for (std::uint32_t c = 0; c < k; ++c) {
        if (A[A[a][b]][c] != A[a][A[b][c]]) throw AxiomViolation("add associative", triple(a, b, c));
        if (M[M[a][b]][c] != M[a][M[b][c]]) throw AxiomViolation("mul associative", triple(a, b, c));
        if (M[a][A[b][c]] != A[M[a][b]][M[a][c]]) throw AxiomViolation("left distributive", triple(a, b, c));
        if (M[A[a][b]][c] != A[M[a][c]][M[b][c]]) throw AxiomViolation("right distributive", triple(a, b, c));
      }
}

}  // namespace

Elem Ring::Impl::raw_add(Elem a, Elem b) const {
  if (!add_tab.empty()) return elem(add_tab[index(a) * order + index(b)]);
  if (spec.kind == RingSpec::Kind::Modular) {
    const std::uint32_t s = index(a) + index(b);
    return elem(s >= spec.modulus ? s - spec.modulus : s);
  }
  auto x = split(a);
  auto y = split(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors[i].add(x[i], y[i]);
  return join(x);
}

Elem Ring::Impl::raw_mul(Elem a, Elem b) const {
  if (!mul_tab.empty()) return elem(mul_tab[index(a) * order + index(b)]);
  if (spec.kind == RingSpec::Kind::Modular)
    return elem(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(index(a)) * index(b)) % spec.modulus));
  auto x = split(a);
  auto y = split(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors[i].mul(x[i], y[i]);
  return join(x);
}

Elem Ring::Impl::raw_neg(Elem a) const {
  if (!neg_tab.empty()) return elem(neg_tab[index(a)]);
  if (spec.kind == RingSpec::Kind::Modular)
    return elem(index(a) == 0 ? 0 : spec.modulus - index(a));
  auto x = split(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = factors[i].neg(x[i]);
  return join(x);
}

std::vector<Elem> Ring::Impl::split(Elem a) const {
  std::vector<Elem> parts(factors.size());
  std::uint32_t rest = index(a);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    parts[i] = elem(rest / stride[i]);
    rest %= stride[i];
  }
  return parts;
}

Elem Ring::Impl::join(std::span<const Elem> parts) const {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) v += index(parts[i]) * stride[i];
  return elem(v);
}

Ring::Ring(const RingSpec& spec) {
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  switch (spec.kind) {
    case RingSpec::Kind::Modular:
      if (spec.modulus < 2) throw AxiomViolation("modulus >= 2", std::to_string(spec.modulus));
      if (spec.modulus > (1u << 20)) throw PreconditionViolation("modulus too large for enumeration");
      impl->order = spec.modulus;
      impl->zero = elem(0);
      impl->one = elem(1);
      break;
    case RingSpec::Kind::Product: {
      if (spec.factors.empty()) throw AxiomViolation("product has a factor", "empty factor list");
      std::uint64_t order = 1;
      for (const auto& f : spec.factors) {
        impl->factors.emplace_back(f);
        order *= impl->factors.back().order();
        if (order > (1u << 20)) throw PreconditionViolation("product ring too large for enumeration");
      }
      impl->order = static_cast<std::uint32_t>(order);
      impl->stride.assign(impl->factors.size(), 1);
      for (std::size_t i = impl->factors.size(); i-- > 1;)
        impl->stride[i - 1] = impl->stride[i] * impl->factors[i].order();
      std::vector<Elem> z, o;
      for (const auto& f : impl->factors) {
        z.push_back(f.zero());
        o.push_back(f.one());
        impl->commutative = impl->commutative && f.is_commutative();
        impl->crt = impl->crt && f.crt_decomposable();
      }
      impl->zero = impl->join(z);
      impl->one = impl->join(o);
      break;
    }
    case RingSpec::Kind::Table: {
      validate_table(spec);
      impl->order = spec.size;
      impl->zero = elem(spec.zero);
      impl->one = elem(spec.one);
      impl->crt = false;
      const std::uint32_t k = spec.size;
      impl->add_tab.resize(std::size_t{k} * k);
      impl->mul_tab.resize(std::size_t{k} * k);
      for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < k; ++b) {
          impl->add_tab[a * k + b] = spec.add[a][b];
          impl->mul_tab[a * k + b] = spec.mul[a][b];
          if (spec.mul[a][b] != spec.mul[b][a]) impl->commutative = false;
        }
      impl->neg_tab.resize(k);
      for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < k; ++b)
          if (spec.add[a][b] == spec.zero) impl->neg_tab[a] = b;
      break;
    }
  }
  if (spec.kind == RingSpec::Kind::Product && impl->order <= kTabulateLimit) {
    const std::uint32_t k = impl->order;
    std::vector<std::uint32_t> add(std::size_t{k} * k), mul(std::size_t{k} * k), neg(k);
    for (std::uint32_t a = 0; a < k; ++a) {
      neg[a] = index(impl->raw_neg(elem(a)));
      for (std::uint32_t b = 0; b < k; ++b) {
        add[a * k + b] = index(impl->raw_add(elem(a), elem(b)));
        mul[a * k + b] = index(impl->raw_mul(elem(a), elem(b)));
      }
    }
    impl->add_tab = std::move(add);
    impl->mul_tab = std::move(mul);
    impl->neg_tab = std::move(neg);
  }
  impl_ = std::move(impl);
}

const RingSpec& Ring::spec() const { return impl_->spec; }
std::uint32_t Ring::order() const { return impl_->order; }
Elem Ring::zero() const { return impl_->zero; }
Elem Ring::one() const { return impl_->one; }
Elem Ring::add(Elem a, Elem b) const { return impl_->raw_add(a, b); }
Elem Ring::neg(Elem a) const { return impl_->raw_neg(a); }
Elem Ring::sub(Elem a, Elem b) const { return impl_->raw_add(a, impl_->raw_neg(b)); }
Elem Ring::mul(Elem a, Elem b) const { return impl_->raw_mul(a, b); }

Elem Ring::from_int(std::int64_t n) const {
  if (kind() == RingSpec::Kind::Modular) {
    const auto m = static_cast<std::int64_t>(spec().modulus);
    return elem(static_cast<std::uint32_t>(((n % m) + m) % m));
  }
  const bool negative = n < 0;
  std::uint64_t k = negative ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Elem acc = zero();
  Elem base = one();
  while (k > 0) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return negative ? neg(acc) : acc;
}

std::vector<Elem> Ring::elements() const {
  std::vector<Elem> out(order());
  for (std::uint32_t i = 0; i < order(); ++i) out[i] = elem(i);
  return out;
}

bool Ring::is_commutative() const { return impl_->commutative; }
bool Ring::crt_decomposable() const { return impl_->crt; }
const std::vector<Ring>& Ring::factors() const { return impl_->factors; }
std::vector<Elem> Ring::split(Elem a) const { return impl_->split(a); }
Elem Ring::join(std::span<const Elem> parts) const { return impl_->join(parts); }

std::string Ring::format(Elem a) const {
  if (kind() != RingSpec::Kind::Product) return std::to_string(index(a));
  std::string out = "(";
  const auto parts = split(a);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += factors()[i].format(parts[i]);
  }
  return out + ")";
}

std::string Ring::describe() const {
  switch (kind()) {
    case RingSpec::Kind::Modular:
      return "Z/" + std::to_string(spec().modulus);
    case RingSpec::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors().size(); ++i) {
        if (i) out += "x";
        out += factors()[i].describe();
      }
      return out;
    }
    case RingSpec::Kind::Table:
      return "table" + std::to_string(spec().size);
  }
  return "?";
}

bool Ring::operator==(const Ring& other) const {
  return impl_ == other.impl_ || impl_->spec == other.impl_->spec;
}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.add(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.sub(data_[i], o.data_[i]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw PreconditionViolation("matrix shape mismatch");
  Matrix out(ring_, rows_, o.cols_);
  const Elem zero = ring_.zero();
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == zero) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = ring_.add(out.at(i, j), ring_.mul(a, o.at(k, j)));
    }
  return out;
}

Matrix Matrix::scaled(Elem r) const {
  Matrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.mul(r, data_[i]);
  return out;
}

bool Matrix::is_zero() const {
  for (Elem e : data_)
    if (e != ring_.zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::format() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << ring_.format(at(i, j));
    }
  }
  os << "]";
  return os.str();
}

std::optional<Elem> vnr_witness(const Ring& ring, Elem a) {
  for (Elem y : ring.elements())
    if (ring.mul(ring.mul(a, y), a) == a) return y;
  return std::nullopt;
}

VnrVerdict is_vnr(const Ring& ring) {
  VnrVerdict v;
  for (Elem a : ring.elements()) {
    auto y = vnr_witness(ring, a);
    if (!y) {
      v.regular = false;
      v.witnesses.clear();
      v.counterexample = a;
      return v;
    }
    v.witnesses.push_back(*y);
  }
  v.regular = true;
  return v;
}

std::optional<Matrix> matrix_vnr_witness(const Matrix& a, std::size_t cap) {
  const Ring& ring = a.ring();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Y is n x m; unknown Y_{kl} has index k*m + l.
  LinearSystem sys;
  sys.num_vars = n * m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinearEquation eq;
      eq.rhs = a.at(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (a.at(i, k) == ring.zero()) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (a.at(l, j) == ring.zero()) continue;
          eq.terms.push_back({a.at(i, k), k * m + l, a.at(l, j)});
        }
      }
      sys.equations.push_back(std::move(eq));
    }
  auto sol = solve_linear_system(ring, sys, cap);
  if (!sol) return std::nullopt;
  Matrix y(ring, n, m);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < m; ++l) y.at(k, l) = (*sol)[k * m + l];
  if (!(a * y * a == a)) throw InternalVerificationFailure("matrix witness failed A*Y*A = A");
  return y;
}

namespace {

void check_square_cap(const Ring& ring, std::size_t cap) {
  const std::size_t n = ring.order();
  if (n * n > cap) throw SearchCapExceeded(cap);
}

}  // namespace

std::vector<Elem> jacobson_radical(const Ring& ring, std::size_t cap) {
  check_square_cap(ring, cap);
  const auto elems = ring.elements();
  std::vector<char> left_invertible(ring.order(), 0);
  for (Elem u : elems)
    for (Elem z : elems)
      if (ring.mul(z, u) == ring.one()) {
        left_invertible[index(u)] = 1;
        break;
      }
  std::vector<Elem> rad;
  for (Elem x : elems) {
    bool in = true;
    for (Elem y : elems)
      if (!left_invertible[index(ring.sub(ring.one(), ring.mul(y, x)))]) {
        in = false;
        break;
      }
    if (in) rad.push_back(x);
  }
  // Two-sided ideal: closed under + and under multiplication on both sides.
  std::vector<char> member(ring.order(), 0);
  for (Elem x : rad) member[index(x)] = 1;
  for (Elem x : rad)
    for (Elem r : elems) {
      if (!member[index(ring.mul(r, x))] || !member[index(ring.mul(x, r))])
        throw InternalVerificationFailure("radical is not a two-sided ideal");
    }
  for (Elem x : rad)
    for (Elem y : rad)
      if (!member[index(ring.add(x, y))]) throw InternalVerificationFailure("radical not additive");
  return rad;
}

SemiprimeVerdict is_semiprime_ring(const Ring& ring, std::size_t cap) {
  check_square_cap(ring, cap);
  const auto elems = ring.elements();
  for (Elem a : elems) {
    if (a == ring.zero()) continue;
    bool annihilated = true;
    for (Elem r : elems)
      if (ring.mul(ring.mul(a, r), a) != ring.zero()) {
        annihilated = false;
        break;
      }
    if (annihilated) return {false, a};
  }
  return {true, std::nullopt};
}

}  // namespace gral
