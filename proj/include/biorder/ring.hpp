#ifndef BIORDER_RING_HPP
#define BIORDER_RING_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "biorder/util.hpp"

namespace biorder {

bool is_prime(std::uint64_t n);

// n x n matrix over GF(q), entries stored row-major. The index codec writes
// entry (i,j) as the base-q digit of weight q^(i*n+j), so for q = 2 the index
// bits are the matrix bits and row i occupies bits [n*i, n*i+n).
class MatrixElement {
 public:
  static constexpr int kMaxDim = 8;

  MatrixElement(int n, std::uint32_t q);  // zero matrix
  static MatrixElement identity(int n, std::uint32_t q);
  static MatrixElement diag_unit(int n, std::uint32_t q, int i);  // E_ii

  int n() const { return n_; }
  std::uint32_t q() const { return q_; }

  std::uint32_t at(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, std::uint32_t v) {
    a_[i * n_ + j] = static_cast<std::uint8_t>(v % q_);
  }

  MatrixElement mul(const MatrixElement& rhs) const;
  MatrixElement add(const MatrixElement& rhs) const;
  MatrixElement neg() const;

  std::uint64_t to_index() const;
  static MatrixElement from_index(int n, std::uint32_t q, std::uint64_t idx);

  friend bool operator==(const MatrixElement& a, const MatrixElement& b) {
    if (a.n_ != b.n_ || a.q_ != b.q_) return false;
    for (int i = 0; i < a.n_ * a.n_; ++i)
      if (a.a_[i] != b.a_[i]) return false;
    return true;
  }

 private:
  int n_;
  std::uint32_t q_;
  std::array<std::uint8_t, kMaxDim * kMaxDim> a_{};
};

// GF(2) product on packed indices, the hot path for large matrix rings.
// Row i of the result is the XOR of the rows of b selected by row i of a.
inline std::uint64_t gf2_mul(std::uint64_t a, std::uint64_t b, int n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t arow = (a >> (n * i)) & mask;
    std::uint64_t row = 0;
    while (arow) {
      int j = std::countr_zero(arow);
      arow &= arow - 1;
      row ^= (b >> (n * j)) & mask;
    }
    out |= row << (n * i);
  }
  return out;
}

inline std::uint64_t gf2_identity(int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) out |= std::uint64_t{1} << (n * i + i);
  return out;
}

// Finite ring with unity, addressed by element index. Multiplication (and
// addition) are tabulated up to kTabulateLimit and computed on demand above;
// either way the table is immutable after construction and all reads are
// thread-safe.
class RingTable {
 public:
  enum class Kind { gf_matrix, z_mod, raw_table };

  static constexpr std::uint32_t kTabulateLimit = 4096;
  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 16;

  Kind kind() const { return kind_; }
  std::uint32_t order() const { return order_; }
  std::uint32_t zero() const { return zero_; }
  std::uint32_t one() const { return one_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;  // additive inverse
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }

  bool tabulated() const { return !mul_table_.empty(); }

  // gf_matrix only
  int dim() const { return n_; }
  std::uint32_t field_order() const { return q_; }

  // z_mod only; regularity of the multiplicative semigroup is expected
  // downstream exactly when the modulus is squarefree.
  std::uint32_t modulus() const { return m_; }
  bool squarefree() const { return squarefree_; }

  std::string describe() const;

  friend RingTable build_matrix_ring(int n, std::uint32_t q,
                                     std::uint64_t max_order);
  friend RingTable build_modular_ring(std::uint32_t m);
  friend RingTable build_table_ring(std::istream& in);

 private:
  RingTable() = default;

  Kind kind_ = Kind::raw_table;
  std::uint32_t order_ = 0;
  std::uint32_t zero_ = 0;
  std::uint32_t one_ = 0;
  int n_ = 0;            // gf_matrix
  std::uint32_t q_ = 0;  // gf_matrix
  std::uint32_t m_ = 0;  // z_mod
  bool squarefree_ = false;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;  // raw_table
};

// mul is the pipeline hot path (~1e9 calls in the largest scans), so the
// dispatch lives in the header.
inline std::uint32_t RingTable::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * order_ + b];
  if (kind_ == Kind::z_mod)
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % m_);
  if (q_ == 2) return static_cast<std::uint32_t>(gf2_mul(a, b, n_));
  return static_cast<std::uint32_t>(
      MatrixElement::from_index(n_, q_, a)
          .mul(MatrixElement::from_index(n_, q_, b))
          .to_index());
}

inline std::uint32_t RingTable::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty())
    return add_table_[static_cast<std::size_t>(a) * order_ + b];
  if (kind_ == Kind::z_mod) return (a + b) % m_;
  if (q_ == 2) return a ^ b;
  return static_cast<std::uint32_t>(
      MatrixElement::from_index(n_, q_, a)
          .add(MatrixElement::from_index(n_, q_, b))
          .to_index());
}

// Matrix ring M_n(F_q). Throws ConfigError for non-prime q or n < 1, and
// ResourceError when q^(n^2) exceeds max_order.
RingTable build_matrix_ring(int n, std::uint32_t q,
                            std::uint64_t max_order = RingTable::kDefaultMaxOrder);

// Z_m for m >= 2. Non-squarefree moduli are allowed; regularity failures are
// diagnosed downstream, not here.
RingTable build_modular_ring(std::uint32_t m);

// CSV tables: first line N, then N rows of N indices for multiplication,
// then N rows for addition. Addition is required to form a ring; a lone
// multiplication table should be ingested as a bare semigroup instead.
RingTable build_table_ring(std::istream& in);

// The diagonal matrix units E_11..E_nn as element indices. gf_matrix only.
std::vector<std::uint32_t> matrix_unit_idempotents(const RingTable& ring);

// e |-> 1 - e. Requires e idempotent; the result is again idempotent and the
// map is an involution.
std::uint32_t complement_of(const RingTable& ring, std::uint32_t e);

}  // namespace biorder

#endif  // BIORDER_RING_HPP
