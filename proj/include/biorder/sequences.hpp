#ifndef BIORDER_SEQUENCES_HPP
#define BIORDER_SEQUENCES_HPP

#include <cstdint>
#include <vector>

#include "biorder/bioset.hpp"
#include "biorder/report.hpp"

namespace biorder {

struct QuotientLattice;  // lattice module

// Vertices are the idempotent positions; edges are the equivalences
// L = wl n wl^-1 and R = wr n wr^-1.
struct ESequenceGraph {
  std::size_t k = 0;
  BitRel l_rel, r_rel, union_rel;
};

ESequenceGraph build_esequence_graph(const BiorderedSet& b);

// Shortest E-sequence lengths, position-indexed. 0 encodes "no sequence",
// d(e,e) = 1 by convention. dl/dr constrain the first step; a reflexive
// first step is legal, so dl(e,e) = dr(e,e) = 1. Lengths above 255 would be
// clamped and flagged (not reachable at the sizes handled here).
struct DistanceTable {
  std::size_t k = 0;
  std::vector<std::uint8_t> d, dl, dr;
  bool overflow = false;

  std::uint8_t dist(std::size_t i, std::size_t j) const { return d[i * k + j]; }
  std::uint8_t dist_l(std::size_t i, std::size_t j) const {
    return dl[i * k + j];
  }
  std::uint8_t dist_r(std::size_t i, std::size_t j) const {
    return dr[i * k + j];
  }
};

// Consecutive steps may reuse a relation (free_steps) or must alternate
// (strict_alternation). L and R are transitive, so the two conventions give
// the same shortest lengths; check_alternation_agreement pins that down per
// structure instead of assuming it.
enum class StepMode { free_steps, strict_alternation };

DistanceTable all_distances(const ESequenceGraph& g,
                            StepMode mode = StepMode::free_steps);

// Element-indexed conveniences.
int distance(const BiorderedSet& b, std::uint32_t e, std::uint32_t f);
int distance_sided(const BiorderedSet& b, std::uint32_t e, std::uint32_t f,
                   Side first);

// L and R are reflexive, symmetric, transitive.
CheckRecord check_esequence_graph(const ESequenceGraph& g);

// free_steps and strict_alternation produce identical d, dl, dr.
CheckRecord check_alternation_agreement(const ESequenceGraph& g);

// d symmetric; d = min nonzero of dl, dr; triangle inequality on nonzero
// entries.
CheckRecord check_distance_invariants(const ESequenceGraph& g,
                                      const DistanceTable& t);

// Prop idpersp, both directions: class(e), class(f) perspective in E/L iff
// 1 <= dl(e,f) <= 3. Stated for ring-derived structures; lists every
// violating pair.
CheckRecord verify_idpersp(const BiorderedSet& b, const QuotientLattice& left,
                           const DistanceTable& t);

// Prop llatpersp (one direction, no ring hypothesis): dl(e,f) in [1,3]
// implies the classes are perspective.
CheckRecord check_llatpersp(const QuotientLattice& left,
                            const DistanceTable& t);

}  // namespace biorder

#endif  // BIORDER_SEQUENCES_HPP
