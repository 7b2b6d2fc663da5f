#ifndef BIORDER_SEMIGROUP_HPP
#define BIORDER_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "biorder/report.hpp"
#include "biorder/ring.hpp"
#include "biorder/util.hpp"

namespace biorder {

// Finite multiplicative structure. Either a view of a ring's multiplicative
// semigroup (the ring outlives the semigroup) or an owned product table.
// Immutable after construction; products are pure reads.
class FiniteSemigroup {
 public:
  static FiniteSemigroup of_ring(const RingTable& ring);
  static FiniteSemigroup from_table(std::vector<std::uint32_t> table);

  std::uint32_t order() const { return order_; }

  std::uint32_t product(std::uint32_t a, std::uint32_t b) const {
    return ring_ ? ring_->mul(a, b)
                 : table_[static_cast<std::size_t>(a) * order_ + b];
  }

  std::optional<std::uint32_t> zero() const { return zero_; }
  std::optional<std::uint32_t> identity() const { return identity_; }

  // Sorted fixed points of squaring, computed at construction.
  const std::vector<std::uint32_t>& idempotent_set() const {
    return idempotents_;
  }

  bool is_idempotent(std::uint32_t x) const { return product(x, x) == x; }

  const RingTable* ring() const { return ring_; }
  bool associative_by_construction() const { return by_construction_; }

 private:
  FiniteSemigroup() = default;
  void scan_idempotents();

  std::uint32_t order_ = 0;
  const RingTable* ring_ = nullptr;
  std::vector<std::uint32_t> table_;
  std::optional<std::uint32_t> zero_;
  std::optional<std::uint32_t> identity_;
  std::vector<std::uint32_t> idempotents_;
  bool by_construction_ = false;
};

// Recomputes the idempotent list by squaring every element.
std::vector<std::uint32_t> idempotents(const FiniteSemigroup& s);

// x -> x'' where x x'' x = x and x'' x x'' = x''. x'' is derived from the
// least-index x' with x x' x = x, so the map is deterministic.
struct RegularityResult {
  bool regular = false;
  std::vector<std::uint32_t> generalized_inverse;       // valid iff regular
  std::optional<std::uint32_t> counterexample;          // least non-regular x
};

RegularityResult regularity_witnesses(const FiniteSemigroup& s);

// Least x' with x x' x = x, or nullopt.
std::optional<std::uint32_t> least_inner_inverse(const FiniteSemigroup& s,
                                                 std::uint32_t x);

// left: {y : y x = 0}; right: {y : x y = 0}. Requires a zero.
std::vector<std::uint32_t> annihilator(const FiniteSemigroup& s,
                                       std::uint32_t x, Side side);

// left: {s x : s in S}; right: {x s : s in S}.
std::vector<std::uint32_t> principal_ideal(const FiniteSemigroup& s,
                                           std::uint32_t x, Side side);

enum class BaerMode { full, sampled };

// Strongly regular Baer property: the left annihilator sets coincide with the
// principal left ideals, and dually on the right.
//
// full    — compares the two set families exhaustively and, when the parent
//           ring is available, certifies lann(x) = S(1-e) with e = x x' per
//           element.
// sampled — seeded: checks the generator pattern for every idempotent plus
//           `samples` random elements.
CheckRecord baer_check(const FiniteSemigroup& s, BaerMode mode,
                       std::uint64_t seed, std::size_t samples = 10000);

// Associativity diagnosis: exhaustive up to order 512, seeded random triples
// above. Ring-backed semigroups pass by construction.
CheckRecord diagnose_associativity(const FiniteSemigroup& s,
                                   std::uint64_t seed);

}  // namespace biorder

#endif  // BIORDER_SEMIGROUP_HPP
