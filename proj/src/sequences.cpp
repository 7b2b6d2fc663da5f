#include "biorder/sequences.hpp"

#include <algorithm>

#include "biorder/lattice.hpp"

namespace biorder {

ESequenceGraph build_esequence_graph(const BiorderedSet& b) {
  ESequenceGraph g;
  g.k = b.size();
  g.l_rel = BitRel(g.k);
  g.r_rel = BitRel(g.k);
  g.union_rel = BitRel(g.k);
  for (std::size_t a = 0; a < g.k; ++a) {
    for (std::size_t c = 0; c < g.k; ++c) {
      bool l = b.omega_l().at(a, c) && b.omega_l().at(c, a);
      bool r = b.omega_r().at(a, c) && b.omega_r().at(c, a);
      if (l) g.l_rel.set(a, c);
      if (r) g.r_rel.set(a, c);
      if (l || r) g.union_rel.set(a, c);
    }
  }
  return g;
}

namespace {

constexpr std::uint8_t kCap = 255;

// Multi-source BFS: every member of `frontier` is at level 1, expansion is
// through `adj`. Writes levels into out (0 = unreached).
bool bfs_fill(const BitRel& adj, BitRow frontier, std::uint8_t* out,
              std::size_t k) {
  bool overflow = false;
  const std::size_t words = adj.words_per_row();
  BitRow visited(words);
  std::size_t level = 1;
  while (frontier.any()) {
    for (std::uint32_t v : frontier.members()) {
      out[v] = static_cast<std::uint8_t>(level > kCap ? kCap : level);
      if (level > kCap) overflow = true;
      visited.set(v);
    }
    BitRow next(words);
    for (std::uint32_t v : frontier.members()) next |= adj.row(v);
    for (std::size_t w = 0; w < words; ++w)
      next.data()[w] &= ~visited.data()[w];
    frontier = next;
    ++level;
  }
  return overflow;
}

// Strict alternation: state = (vertex, relation used for the previous step).
bool bfs_fill_strict(const ESequenceGraph& g, BitRow start_l, BitRow start_r,
                     std::uint8_t* out, std::size_t k) {
  bool overflow = false;
  const std::size_t words = g.l_rel.words_per_row();
  BitRow vis_l(words), vis_r(words);
  BitRow fr_l = start_l, fr_r = start_r;
  std::size_t level = 1;
  auto record = [&](std::uint32_t v) {
    if (out[v] == 0) {
      out[v] = static_cast<std::uint8_t>(level > kCap ? kCap : level);
      if (level > kCap) overflow = true;
    }
  };
  while (fr_l.any() || fr_r.any()) {
    for (std::uint32_t v : fr_l.members()) {
      record(v);
      vis_l.set(v);
    }
    for (std::uint32_t v : fr_r.members()) {
      record(v);
      vis_r.set(v);
    }
    BitRow next_r(words), next_l(words);
    for (std::uint32_t v : fr_l.members()) next_r |= g.r_rel.row(v);
    for (std::uint32_t v : fr_r.members()) next_l |= g.l_rel.row(v);
    for (std::size_t w = 0; w < words; ++w) {
      next_r.data()[w] &= ~vis_r.data()[w];
      next_l.data()[w] &= ~vis_l.data()[w];
    }
    fr_l = next_l;
    fr_r = next_r;
    ++level;
  }
  return overflow;
}

}  // namespace

DistanceTable all_distances(const ESequenceGraph& g, StepMode mode) {
  DistanceTable t;
  t.k = g.k;
  t.d.assign(g.k * g.k, 0);
  t.dl.assign(g.k * g.k, 0);
  t.dr.assign(g.k * g.k, 0);
  const std::size_t words = g.l_rel.words_per_row();
  std::vector<char> over(g.k, 0);
  parallel_for(0, g.k, [&](std::size_t src) {
    BitRow lrow(g.l_rel.row(src), words);
    BitRow rrow(g.r_rel.row(src), words);
    bool ov = false;
    if (mode == StepMode::free_steps) {
      ov |= bfs_fill(g.union_rel, BitRow(g.union_rel.row(src), words),
                     t.d.data() + src * g.k, g.k);
      ov |= bfs_fill(g.union_rel, lrow, t.dl.data() + src * g.k, g.k);
      ov |= bfs_fill(g.union_rel, rrow, t.dr.data() + src * g.k, g.k);
    } else {
      ov |= bfs_fill_strict(g, lrow, rrow, t.d.data() + src * g.k, g.k);
      ov |= bfs_fill_strict(g, lrow, BitRow(words), t.dl.data() + src * g.k,
                            g.k);
      ov |= bfs_fill_strict(g, BitRow(words), rrow, t.dr.data() + src * g.k,
                            g.k);
    }
    over[src] = ov;
  });
  for (char o : over) t.overflow |= o;
  // shortest nontrivial walk back to the source never beats the convention
  for (std::size_t v = 0; v < g.k; ++v) t.d[v * g.k + v] = 1;
  return t;
}

namespace {

std::size_t pos_or_throw(const BiorderedSet& b, std::uint32_t e) {
  std::int32_t p = e < b.parent().order() ? b.position_of(e) : -1;
  if (p < 0) throw std::invalid_argument("distance: not an idempotent");
  return static_cast<std::size_t>(p);
}

}  // namespace

int distance(const BiorderedSet& b, std::uint32_t e, std::uint32_t f) {
  std::size_t ep = pos_or_throw(b, e), fp = pos_or_throw(b, f);
  if (ep == fp) return 1;
  ESequenceGraph g = build_esequence_graph(b);
  std::vector<std::uint8_t> row(g.k, 0);
  bfs_fill(g.union_rel, BitRow(g.union_rel.row(ep), g.union_rel.words_per_row()),
           row.data(), g.k);
  return row[fp];
}

int distance_sided(const BiorderedSet& b, std::uint32_t e, std::uint32_t f,
                   Side first) {
  std::size_t ep = pos_or_throw(b, e), fp = pos_or_throw(b, f);
  ESequenceGraph g = build_esequence_graph(b);
  const BitRel& rel = first == Side::left ? g.l_rel : g.r_rel;
  std::vector<std::uint8_t> row(g.k, 0);
  bfs_fill(g.union_rel, BitRow(rel.row(ep), rel.words_per_row()), row.data(),
           g.k);
  return row[fp];
}

CheckRecord check_esequence_graph(const ESequenceGraph& g) {
  CheckRecord rec;
  rec.id = "distances.graph";
  rec.anchor = "L and R are equivalences";
  struct Named {
    const char* name;
    const BitRel* rel;
  };
  for (auto [name, rel] : {Named{"L", &g.l_rel}, Named{"R", &g.r_rel}}) {
    if (!rel->is_reflexive()) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back({{"relation", name},
                                     {"reason", "not-reflexive"}});
    }
    std::size_t i, j, k;
    if (!rel->is_transitive(&i, &j, &k)) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back({{"relation", name},
                                     {"reason", "not-transitive"},
                                     {"i", i},
                                     {"j", j},
                                     {"k", k}});
    }
    for (std::size_t a = 0; a < g.k; ++a)
      for (std::size_t b = 0; b < g.k; ++b)
        if (rel->at(a, b) != rel->at(b, a)) {
          rec.verdict = Verdict::fail;
          rec.counterexamples.push_back({{"relation", name},
                                         {"reason", "not-symmetric"},
                                         {"i", a},
                                         {"j", b}});
        }
  }
  return rec;
}

CheckRecord check_alternation_agreement(const ESequenceGraph& g) {
  CheckRecord rec;
  rec.id = "distances.alternation";
  rec.anchor = "free-step and strictly alternating lengths coincide";
  DistanceTable free = all_distances(g, StepMode::free_steps);
  DistanceTable strict = all_distances(g, StepMode::strict_alternation);
  for (std::size_t i = 0; i < g.k && rec.counterexamples.size() < 8; ++i) {
    for (std::size_t j = 0; j < g.k; ++j) {
      if (free.dist(i, j) != strict.dist(i, j) ||
          free.dist_l(i, j) != strict.dist_l(i, j) ||
          free.dist_r(i, j) != strict.dist_r(i, j)) {
        rec.verdict = Verdict::fail;
        rec.counterexamples.push_back(
            {{"i", i},
             {"j", j},
             {"free", {free.dist(i, j), free.dist_l(i, j), free.dist_r(i, j)}},
             {"strict",
              {strict.dist(i, j), strict.dist_l(i, j), strict.dist_r(i, j)}}});
      }
    }
  }
  return rec;
}

CheckRecord check_distance_invariants(const ESequenceGraph& g,
                                      const DistanceTable& t) {
  CheckRecord rec;
  rec.id = "distances.invariants";
  rec.anchor = "d symmetric; d = min nonzero of d_l, d_r; triangle";
  for (std::size_t i = 0; i < g.k; ++i) {
    for (std::size_t j = 0; j < g.k; ++j) {
      if (t.dist(i, j) != t.dist(j, i)) {
        rec.verdict = Verdict::fail;
        rec.counterexamples.push_back(
            {{"reason", "asymmetric-d"}, {"i", i}, {"j", j}});
      }
      std::uint8_t a = t.dist_l(i, j), b = t.dist_r(i, j);
      std::uint8_t expect = 0;
      if (a && b)
        expect = std::min(a, b);
      else
        expect = a ? a : b;
      if (i == j) expect = 1;  // convention overrides the walk length
      if (t.dist(i, j) != expect) {
        rec.verdict = Verdict::fail;
        rec.counterexamples.push_back({{"reason", "min-rule"},
                                       {"i", i},
                                       {"j", j},
                                       {"d", t.dist(i, j)},
                                       {"d_l", a},
                                       {"d_r", b}});
      }
    }
  }
  for (std::size_t i = 0; i < g.k; ++i)
    for (std::size_t j = 0; j < g.k; ++j) {
      if (!t.dist(i, j)) continue;
      for (std::size_t l = 0; l < g.k; ++l) {
        if (!t.dist(j, l) || !t.dist(i, l)) continue;
        if (t.dist(i, l) > t.dist(i, j) + t.dist(j, l)) {
          rec.verdict = Verdict::fail;
          rec.counterexamples.push_back({{"reason", "triangle"},
                                         {"i", i},
                                         {"j", j},
                                         {"k", l}});
        }
      }
    }
  return rec;
}

namespace {

// complement bitmask per class, over classes
std::vector<BitRow> complement_masks(const QuotientLattice& l) {
  const std::size_t n = l.classes();
  const std::size_t words = BitRel::word_count(n);
  std::vector<BitRow> masks(n, BitRow(words));
  if (!l.is_lattice || !l.bottom || !l.top) return masks;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t x = 0; x < n; ++x)
      if (l.meet(a, x) == *l.bottom && l.join(a, x) == *l.top)
        masks[a].set(x);
  return masks;
}

bool masks_intersect(const BitRow& a, const BitRow& b) {
  for (std::size_t w = 0; w < a.words(); ++w)
    if (a.data()[w] & b.data()[w]) return true;
  return false;
}

}  // namespace

CheckRecord verify_idpersp(const BiorderedSet& b, const QuotientLattice& left,
                           const DistanceTable& t) {
  CheckRecord rec;
  rec.id = "idpersp";
  rec.anchor = "Prop idpersp (perspective iff 1 <= d_l <= 3)";
  if (!b.parent().ring()) {
    rec.verdict = Verdict::skip;
    rec.note = "stated for ring-derived structures";
    return rec;
  }
  if (!left.is_lattice) {
    rec.verdict = Verdict::skip;
    rec.note = "E/L is not a lattice here";
    return rec;
  }
  auto masks = complement_masks(left);
  const std::size_t k = b.size();
  std::vector<std::vector<nlohmann::json>> bad(k);
  parallel_for(0, k, [&](std::size_t p) {
    std::uint32_t ca = left.class_of[p];
    for (std::size_t q = 0; q < k; ++q) {
      bool persp = masks_intersect(masks[ca], masks[left.class_of[q]]);
      std::uint8_t dl = t.dist_l(p, q);
      if (persp != (dl >= 1 && dl <= 3))
        bad[p].push_back({{"e", b.element(p)},
                          {"f", b.element(q)},
                          {"perspective", persp},
                          {"d_l", dl}});
    }
  });
  for (auto& v : bad)
    for (auto& c : v) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back(std::move(c));
    }
  if (rec.verdict == Verdict::pass)
    rec.note = "exhaustive over " + std::to_string(k * k) + " ordered pairs";
  return rec;
}

CheckRecord check_llatpersp(const QuotientLattice& left,
                            const DistanceTable& t) {
  CheckRecord rec;
  rec.id = "llatpersp";
  rec.anchor = "Prop llatpersp (d_l <= 3 implies perspective)";
  if (!left.is_lattice) {
    rec.verdict = Verdict::skip;
    rec.note = "E/L is not a lattice here";
    return rec;
  }
  auto masks = complement_masks(left);
  const std::size_t k = t.k;
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      std::uint8_t dl = t.dist_l(p, q);
      if (dl < 1 || dl > 3) continue;
      if (!masks_intersect(masks[left.class_of[p]],
                           masks[left.class_of[q]])) {
        rec.verdict = Verdict::fail;
        rec.counterexamples.push_back({{"p", p}, {"q", q}, {"d_l", dl}});
      }
    }
  }
  return rec;
}

}  // namespace biorder
