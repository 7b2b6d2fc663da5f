#include "biorder/ring.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace biorder {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

MatrixElement::MatrixElement(int n, std::uint32_t q) : n_(n), q_(q) {
  if (n < 1 || n > kMaxDim) throw ConfigError("matrix dimension out of range");
}

MatrixElement MatrixElement::identity(int n, std::uint32_t q) {
  MatrixElement m(n, q);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixElement MatrixElement::diag_unit(int n, std::uint32_t q, int i) {
  MatrixElement m(n, q);
  m.set(i, i, 1);
  return m;
}

MatrixElement MatrixElement::mul(const MatrixElement& rhs) const {
  MatrixElement out(n_, q_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < n_; ++k) s += at(i, k) * rhs.at(k, j);
      out.set(i, j, s % q_);
    }
  }
  return out;
}

MatrixElement MatrixElement::add(const MatrixElement& rhs) const {
  MatrixElement out(n_, q_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, (at(i, j) + rhs.at(i, j)) % q_);
  return out;
}

MatrixElement MatrixElement::neg() const {
  MatrixElement out(n_, q_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.set(i, j, (q_ - at(i, j)) % q_);
  return out;
}

std::uint64_t MatrixElement::to_index() const {
  std::uint64_t idx = 0;
  for (int d = n_ * n_ - 1; d >= 0; --d) idx = idx * q_ + a_[d];
  return idx;
}

MatrixElement MatrixElement::from_index(int n, std::uint32_t q,
                                        std::uint64_t idx) {
  MatrixElement m(n, q);
  for (int d = 0; d < n * n; ++d) {
    m.a_[d] = static_cast<std::uint8_t>(idx % q);
    idx /= q;
  }
  return m;
}

std::uint32_t RingTable::neg(std::uint32_t a) const {
  switch (kind_) {
    case Kind::z_mod:
      return (m_ - a) % m_;
    case Kind::gf_matrix:
      if (q_ == 2) return a;
      return static_cast<std::uint32_t>(
          MatrixElement::from_index(n_, q_, a).neg().to_index());
    case Kind::raw_table:
      return neg_table_[a];
  }
  throw std::logic_error("unreachable");
}

std::string RingTable::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::gf_matrix:
      os << "M_" << n_ << "(F_" << q_ << ")";
      break;
    case Kind::z_mod:
      os << "Z_" << m_;
      break;
    case Kind::raw_table:
      os << "table ring of order " << order_;
      break;
  }
  return os.str();
}

namespace {

void tabulate(RingTable& ring, std::vector<std::uint32_t>& mul_out,
              std::vector<std::uint32_t>& add_out) {
  const std::size_t n = ring.order();
  mul_out.resize(n * n);
  add_out.resize(n * n);
  parallel_for(0, n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      mul_out[a * n + b] = ring.mul(static_cast<std::uint32_t>(a),
                                    static_cast<std::uint32_t>(b));
      add_out[a * n + b] = ring.add(static_cast<std::uint32_t>(a),
                                    static_cast<std::uint32_t>(b));
    }
  });
}

}  // namespace

RingTable build_matrix_ring(int n, std::uint32_t q, std::uint64_t max_order) {
  if (n < 1) throw ConfigError("matrix dimension must be at least 1");
  if (!is_prime(q))
    throw ConfigError("field order must be prime, got " + std::to_string(q));
  std::uint64_t order = 1;
  for (int d = 0; d < n * n; ++d) {
    order *= q;
    if (order > max_order)
      throw ResourceError("ring order " + std::to_string(q) + "^" +
                          std::to_string(n * n) + " exceeds the budget of " +
                          std::to_string(max_order) + " elements");
  }
  if (n > MatrixElement::kMaxDim)
    throw ConfigError("matrix dimension above supported maximum " +
                      std::to_string(MatrixElement::kMaxDim));

  RingTable ring;
  ring.kind_ = RingTable::Kind::gf_matrix;
  ring.order_ = static_cast<std::uint32_t>(order);
  ring.n_ = n;
  ring.q_ = q;
  ring.zero_ = 0;
  ring.one_ = static_cast<std::uint32_t>(
      MatrixElement::identity(n, q).to_index());

  if (order <= RingTable::kTabulateLimit) {
    std::vector<std::uint32_t> mul_tab, add_tab;
    tabulate(ring, mul_tab, add_tab);
    ring.mul_table_ = std::move(mul_tab);
    ring.add_table_ = std::move(add_tab);
  }
  return ring;
}

RingTable build_modular_ring(std::uint32_t m) {
  if (m < 2) throw ConfigError("modulus must be at least 2");
  RingTable ring;
  ring.kind_ = RingTable::Kind::z_mod;
  ring.order_ = m;
  ring.m_ = m;
  ring.zero_ = 0;
  ring.one_ = 1 % m;
  ring.squarefree_ = true;
  for (std::uint32_t d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) ring.squarefree_ = false;
  return ring;
}

RingTable build_table_ring(std::istream& in) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw ConfigError("table file: bad element count");

  auto read_table = [&](const char* what) {
    std::vector<std::uint32_t> t(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      // entries separated by commas and/or whitespace
      while (in.peek() == ',' || in.peek() == ' ' || in.peek() == '\n' ||
             in.peek() == '\r' || in.peek() == '\t')
        in.get();
      if (!(in >> t[i]))
        throw ConfigError(std::string("table file: truncated ") + what +
                          " table");
      if (t[i] >= n)
        throw ConfigError(std::string("table file: ") + what +
                          " entry out of range");
    }
    return t;
  };

  RingTable ring;
  ring.kind_ = RingTable::Kind::raw_table;
  ring.order_ = static_cast<std::uint32_t>(n);
  ring.mul_table_ = read_table("multiplication");
  ring.add_table_ = read_table("addition");

  // locate the additive neutral, then the multiplicative one
  bool found = false;
  for (std::uint32_t z = 0; z < n && !found; ++z) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = ring.add(z, x) == x && ring.add(x, z) == x;
    if (ok) {
      ring.zero_ = z;
      found = true;
    }
  }
  if (!found) throw ConfigError("table file: no additive identity");
  found = false;
  for (std::uint32_t o = 0; o < n && !found; ++o) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x)
      ok = ring.mul(o, x) == x && ring.mul(x, o) == x;
    if (ok) {
      ring.one_ = o;
      found = true;
    }
  }
  if (!found) throw ConfigError("table file: no unity");

  ring.neg_table_.assign(n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (ring.add(a, b) == ring.zero_) {
        ring.neg_table_[a] = b;
        has = true;
        break;
      }
    }
    if (!has)
      throw ConfigError("table file: element " + std::to_string(a) +
                        " has no additive inverse");
  }
  return ring;
}

std::vector<std::uint32_t> matrix_unit_idempotents(const RingTable& ring) {
  if (ring.kind() != RingTable::Kind::gf_matrix)
    throw std::invalid_argument("matrix units need a matrix ring, got " +
                                ring.describe());
  std::vector<std::uint32_t> units;
  units.reserve(ring.dim());
  for (int i = 0; i < ring.dim(); ++i)
    units.push_back(static_cast<std::uint32_t>(
        MatrixElement::diag_unit(ring.dim(), ring.field_order(), i)
            .to_index()));
  return units;
}

std::uint32_t complement_of(const RingTable& ring, std::uint32_t e) {
  if (ring.mul(e, e) != e)
    throw std::invalid_argument("complement_of: element " + std::to_string(e) +
                                " is not idempotent");
  return ring.sub(ring.one(), e);
}

}  // namespace biorder
