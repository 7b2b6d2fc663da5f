#ifndef BIORDER_LATTICE_HPP
#define BIORDER_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "biorder/axioms.hpp"
#include "biorder/bioset.hpp"
#include "biorder/report.hpp"

namespace biorder {

struct DistanceTable;  // sequences module

// E/L (or E/R) with the induced order. Classes are numbered by first
// occurrence scanning positions upward, so class ids are ordered by their
// least element and the canonical representative of class i is rep[i].
// Whether the order is a lattice is diagnosed, never assumed; join/meet
// tables exist only when it is.
struct QuotientLattice {
  Side side = Side::left;
  bool from_biorder = false;

  std::vector<std::uint32_t> class_of;    // position -> class (biorder-derived)
  std::vector<std::uint32_t> rep;         // class -> element index (or raw id)
  std::vector<std::uint32_t> class_size;
  BitRel le;                              // class order
  bool is_lattice = false;
  nlohmann::json diagnosis;               // first lub/glb failure
  std::optional<std::uint32_t> bottom, top;
  std::vector<std::uint32_t> join_table, meet_table;

  std::size_t classes() const { return rep.size(); }
  bool leq(std::uint32_t a, std::uint32_t b) const { return le.at(a, b); }
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const {
    return join_table[a * classes() + b];
  }
  std::uint32_t meet(std::uint32_t a, std::uint32_t b) const {
    return meet_table[a * classes() + b];
  }
  std::uint32_t class_of_element(const BiorderedSet& b,
                                 std::uint32_t element) const;
};

QuotientLattice quotient_lattice(const BiorderedSet& b, Side side);

// Raw partial order on {0..count-1}; pairs are closed reflexively and
// transitively. Rejects non-antisymmetric input.
QuotientLattice lattice_from_order(
    std::size_t count,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le_pairs);

// Lattice-hood diagnosis as a record (pass iff every pair has unique lub and
// glb and the order is bounded).
CheckRecord lattice_structure_record(const QuotientLattice& l);

// a <= c implies a v (b ^ c) = (a v b) ^ c, all triples.
CheckRecord check_modular(const QuotientLattice& l);

// Every class has a complement; with a biorder and complement map attached,
// additionally class(c(e)) complements class(e) for every idempotent.
CheckRecord check_complemented(const QuotientLattice& l,
                               const BiorderedSet* b = nullptr,
                               const ComplementMap* c = nullptr);

// class_L(e) -> class_R(c(e)) is a well-defined order-reversing bijection.
CheckRecord dual_isomorphism_check(const QuotientLattice& left,
                                   const QuotientLattice& right,
                                   const BiorderedSet& b,
                                   const ComplementMap& c);

// class(e) <= class(f) iff the principal ideal of e is contained in that
// of f, over all idempotent pairs (ideals computed element-by-element).
CheckRecord check_ideal_isomorphism(const QuotientLattice& l,
                                    const BiorderedSet& b);

struct IndependenceResult {
  bool ok = false;
  std::optional<std::size_t> witness_index;  // i with a_i ^ (v_{j!=i} a_j) != 0
};

// Empty join is the bottom, so a single class is independent iff trivially.
IndependenceResult independent(const QuotientLattice& l,
                               const std::vector<std::uint32_t>& cls);

// Least class complementing both a and b, if any.
std::optional<std::uint32_t> perspective(const QuotientLattice& l,
                                         std::uint32_t a, std::uint32_t b);

// Prop sumidlat: for f omega c(e), class(e) v class(f) = class(e (+) f) and
// class(e) ^ class(f) = bottom; exhaustive over qualifying pairs.
CheckRecord check_sumidlat(const QuotientLattice& left, const BiorderedSet& b,
                           const ComplementMap& c);

// Prop llatind on seeded random families with pairwise M(e_i,e_j) = {0}.
CheckRecord check_llatind_random(const QuotientLattice& left,
                                 const BiorderedSet& b, const ComplementMap& c,
                                 std::uint64_t seed, int families = 50);

// E4 plus its lattice consequences for a candidate basis family.
struct BasisCertificate {
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> classes;
  bool hypothesis_met = false;  // n >= 4
  CheckRecord e4_i, e4_ii, e4_iii;
  CheckRecord independence, join_top, perspectivity;

  bool all_passed() const {
    return !e4_i.failed() && !e4_ii.failed() && !e4_iii.failed() &&
           !independence.failed() && !join_top.failed() &&
           !perspectivity.failed();
  }
  std::vector<const CheckRecord*> records() const {
    return {&e4_i, &e4_ii, &e4_iii, &independence, &join_top, &perspectivity};
  }
};

BasisCertificate homogeneous_basis_check(const QuotientLattice& left,
                                         const BiorderedSet& b,
                                         const ComplementMap& c,
                                         const std::vector<std::uint32_t>& elems,
                                         const DistanceTable& dist);

}  // namespace biorder

#endif  // BIORDER_LATTICE_HPP
