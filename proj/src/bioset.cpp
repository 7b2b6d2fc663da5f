#include "biorder/bioset.hpp"

#include <algorithm>
#include <stdexcept>

namespace biorder {

BiorderedSet BiorderedSet::build(const FiniteSemigroup& parent) {
  BiorderedSet b;
  b.parent_ = &parent;
  b.elems_ = parent.idempotent_set();
  if (b.elems_.empty())
    throw std::invalid_argument("biorder needs at least one idempotent");
  b.pos_.assign(parent.order(), -1);
  for (std::size_t i = 0; i < b.elems_.size(); ++i)
    b.pos_[b.elems_[i]] = static_cast<std::int32_t>(i);

  const std::size_t k = b.elems_.size();
  b.prods_.assign(k * k, 0);
  b.wl_ = BitRel(k);
  b.wr_ = BitRel(k);
  parallel_for(0, k, [&](std::size_t a) {
    for (std::size_t c = 0; c < k; ++c)
      b.prods_[a * k + c] = parent.product(b.elems_[a], b.elems_[c]);
  });
  parallel_for(0, k, [&](std::size_t g) {
    for (std::size_t e = 0; e < k; ++e) {
      if (b.prods_[g * k + e] == b.elems_[g]) b.wl_.set(g, e);
      if (b.prods_[e * k + g] == b.elems_[g]) b.wr_.set(g, e);
    }
  });
  b.wl_down_ = b.wl_.transposed();
  b.wr_down_ = b.wr_.transposed();

  if (auto z = parent.zero(); z && b.pos_[*z] >= 0)
    b.zero_pos_ = static_cast<std::size_t>(b.pos_[*z]);
  if (auto o = parent.identity(); o && b.pos_[*o] >= 0)
    b.one_pos_ = static_cast<std::size_t>(b.pos_[*o]);
  return b;
}

std::optional<std::uint32_t> BiorderedSet::basic_product(std::size_t a,
                                                         std::size_t b) const {
  if (wl_.at(a, b) || wr_.at(a, b) || wl_.at(b, a) || wr_.at(b, a))
    return idem_product(a, b);
  return std::nullopt;
}

namespace {

std::size_t require_position(const BiorderedSet& b, std::uint32_t e,
                             const char* who) {
  std::int32_t p = e < b.parent().order() ? b.position_of(e) : -1;
  if (p < 0)
    throw std::invalid_argument(std::string(who) + ": element " +
                                std::to_string(e) + " is not an idempotent");
  return static_cast<std::size_t>(p);
}

BitRow mset_row(const BiorderedSet& b, std::size_t ep, std::size_t fp) {
  BitRow row(b.omega_l_down().row(ep), b.omega_l_down().words_per_row());
  row &= b.omega_r_down().row(fp);
  return row;
}

// Positions of S(e,f) by the semigroup characterization.
std::vector<std::uint32_t> sandwich_semigroup(const BiorderedSet& b,
                                              std::size_t ep, std::size_t fp) {
  const FiniteSemigroup& s = b.parent();
  const std::size_t k = b.size();
  const std::uint32_t e = b.element(ep), f = b.element(fp);
  const std::uint32_t ef = b.idem_product(ep, fp);
  std::vector<std::uint32_t> out;
  for (std::size_t hp = 0; hp < k; ++hp) {
    const std::uint32_t h = b.element(hp);
    if (s.product(b.idem_product(fp, hp), e) != h) continue;
    if (s.product(b.idem_product(ep, hp), f) != ef) continue;
    out.push_back(static_cast<std::uint32_t>(hp));
  }
  return out;
}

// Positions of S(e,f) as the greatest elements of M(e,f) under the sandwich
// preorder. scan_all = false stops at the first greatest element (enough for
// the nonemptiness check); candidates are scanned from the top since greatest
// elements tend to sit high in the index order.
std::vector<std::uint32_t> sandwich_abstract(const BiorderedSet& b,
                                             std::size_t ep, std::size_t fp,
                                             bool scan_all = true) {
  BitRow m = mset_row(b, ep, fp);
  std::vector<std::uint32_t> members = m.members();
  const std::size_t k = b.size();

  // basic products e*g and g*f for each member, as positions
  std::vector<std::uint32_t> eg(members.size()), gf(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    std::uint32_t g = members[i];
    std::int32_t egp = b.position_of(b.idem_product(ep, g));
    std::int32_t gfp = b.position_of(b.idem_product(g, fp));
    if (egp < 0 || gfp < 0)
      throw std::logic_error("basic product left the idempotents");
    eg[i] = static_cast<std::uint32_t>(egp);
    gf[i] = static_cast<std::uint32_t>(gfp);
  }
  auto below = [&](std::size_t gi, std::size_t hi) {
    return b.omega_r().at(eg[gi], eg[hi]) && b.omega_l().at(gf[gi], gf[hi]);
  };

  std::vector<std::uint32_t> out;
  for (std::size_t hi = members.size(); hi-- > 0;) {
    bool greatest = true;
    for (std::size_t gi = 0; gi < members.size(); ++gi) {
      if (!below(gi, hi)) {
        greatest = false;
        break;
      }
    }
    if (greatest) {
      out.push_back(members[hi]);
      if (!scan_all) break;
    }
  }
  std::sort(out.begin(), out.end());
  (void)k;
  return out;
}

std::vector<std::uint32_t> to_elements(const BiorderedSet& b,
                                       const std::vector<std::uint32_t>& pos) {
  std::vector<std::uint32_t> out;
  out.reserve(pos.size());
  for (std::uint32_t p : pos) out.push_back(b.element(p));
  return out;
}

}  // namespace

MSet m_set(const BiorderedSet& b, std::uint32_t e, std::uint32_t f) {
  std::size_t ep = require_position(b, e, "m_set");
  std::size_t fp = require_position(b, f, "m_set");
  MSet out;
  out.e = e;
  out.f = f;
  out.members = to_elements(b, mset_row(b, ep, fp).members());
  return out;
}

SandwichSet sandwich_set(const BiorderedSet& b, std::uint32_t e,
                         std::uint32_t f, SandwichRoute route) {
  std::size_t ep = require_position(b, e, "sandwich_set");
  std::size_t fp = require_position(b, f, "sandwich_set");
  SandwichSet out;
  out.e = e;
  out.f = f;
  out.route = route;
  out.members = to_elements(
      b, route == SandwichRoute::semigroup ? sandwich_semigroup(b, ep, fp)
                                           : sandwich_abstract(b, ep, fp));
  return out;
}

CheckRecord check_quasi_orders(const BiorderedSet& b) {
  CheckRecord rec;
  rec.id = "biorder.quasi-orders";
  rec.anchor = "quasi-order axioms for wl, wr";
  std::size_t i, j, k;
  struct Named {
    const char* name;
    const BitRel* rel;
  };
  for (auto [name, rel] : {Named{"omega_l", &b.omega_l()},
                           Named{"omega_r", &b.omega_r()}}) {
    if (!rel->is_reflexive()) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back({{"relation", name},
                                     {"reason", "not-reflexive"}});
    }
    if (!rel->is_transitive(&i, &j, &k)) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back({{"relation", name},
                                     {"reason", "not-transitive"},
                                     {"e", b.element(i)},
                                     {"f", b.element(j)},
                                     {"g", b.element(k)}});
    }
  }
  // omega = wl n wr antisymmetric, hence a partial order
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = 0; c < b.size(); ++c)
      if (a != c && b.omega(a, c) && b.omega(c, a)) {
        rec.verdict = Verdict::fail;
        rec.counterexamples.push_back({{"reason", "omega-not-antisymmetric"},
                                       {"e", b.element(a)},
                                       {"f", b.element(c)}});
      }
  return rec;
}

CheckRecord check_basic_products(const BiorderedSet& b) {
  CheckRecord rec;
  rec.id = "biorder.basic-products";
  rec.anchor = "basic products idempotent on the domain";
  const std::size_t k = b.size();
  std::vector<std::vector<nlohmann::json>> bad(k);
  parallel_for(0, k, [&](std::size_t g) {
    for (std::size_t e = 0; e < k; ++e) {
      if (g == e) continue;
      if (!b.omega_l().at(g, e) && !b.omega_r().at(g, e)) continue;
      // one product equals g by definition; the other must stay idempotent
      for (std::uint32_t p : {b.idem_product(g, e), b.idem_product(e, g)}) {
        if (!b.contains(p))
          bad[g].push_back({{"e", b.element(g)},
                            {"f", b.element(e)},
                            {"product", p}});
      }
    }
  });
  for (auto& v : bad)
    for (auto& c : v) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back(std::move(c));
    }
  if (rec.verdict == Verdict::pass)
    rec.note = "products over the domain agree with the parent semigroup by "
               "construction";
  return rec;
}

CheckRecord check_regularity(const BiorderedSet& b) {
  CheckRecord rec;
  rec.id = "biorder.regularity";
  rec.anchor = "sandwich sets nonempty";
  const std::size_t k = b.size();
  std::vector<std::int64_t> first_bad(k, -1);
  parallel_for(0, k, [&](std::size_t e) {
    for (std::size_t f = 0; f < k; ++f) {
      if (sandwich_abstract(b, e, f, /*scan_all=*/false).empty()) {
        first_bad[e] = static_cast<std::int64_t>(f);
        return;
      }
    }
  });
  for (std::size_t e = 0; e < k; ++e) {
    if (first_bad[e] >= 0) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back(
          {{"e", b.element(e)},
           {"f", b.element(static_cast<std::size_t>(first_bad[e]))}});
    }
  }
  return rec;
}

CheckRecord check_prod0(const BiorderedSet& b, bool parent_regular) {
  CheckRecord rec;
  rec.id = "biorder.prod0";
  rec.anchor = "Lemma prod0 (ef = 0 iff M(e,f) = {0})";
  if (!b.parent().zero() || !b.zero_pos()) {
    rec.verdict = Verdict::skip;
    rec.note = "parent has no zero";
    return rec;
  }
  if (!parent_regular) {
    rec.verdict = Verdict::skip;
    rec.note = "stated for regular semigroups; parent is not regular";
    return rec;
  }
  const std::size_t k = b.size();
  const std::uint32_t zero = *b.parent().zero();
  const std::size_t zp = *b.zero_pos();
  std::vector<std::vector<std::uint32_t>> bad(k);
  parallel_for(0, k, [&](std::size_t e) {
    for (std::size_t f = 0; f < k; ++f) {
      bool zero_prod = b.idem_product(e, f) == zero;
      bool mset_zero = mset_row(b, e, f).is_singleton(zp);
      if (zero_prod != mset_zero) bad[e].push_back(static_cast<std::uint32_t>(f));
    }
  });
  for (std::size_t e = 0; e < k; ++e)
    for (std::uint32_t f : bad[e]) {
      rec.verdict = Verdict::fail;
      rec.counterexamples.push_back({{"e", b.element(e)},
                                     {"f", b.element(f)}});
    }
  return rec;
}

CheckRecord check_route_agreement(const BiorderedSet& b) {
  CheckRecord rec;
  rec.id = "sandwich.route-agreement";
  rec.anchor = "S(e,f) by preorder == S(e,f) by fhe=h, ehf=ef";
  const std::size_t k = b.size();
  std::vector<std::vector<nlohmann::json>> bad(k);
  parallel_for(0, k, [&](std::size_t e) {
    for (std::size_t f = 0; f < k; ++f) {
      auto abs = sandwich_abstract(b, e, f);
      auto sem = sandwich_semigroup(b, e, f);
      if (abs != sem)
        bad[e].push_back({{"e", b.element(e)},
                          {"f", b.element(f)},
                          {"abstract", to_elements(b, abs)},
                          {"semigroup", to_elements(b, sem)}});
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

CheckRecord mset_variant_note(const BiorderedSet& b) {
  CheckRecord rec;
  rec.id = "biorder.mset-variant";
  rec.anchor = "M(e,f) reading: wl(e) n wr(f) vs wl(e) n wr(e)";
  rec.verdict = Verdict::info;
  if (!b.parent().zero() || !b.zero_pos()) {
    rec.note = "no zero; the readings cannot be separated by the "
               "product-zero equivalence";
    return rec;
  }
  const std::size_t k = b.size();
  const std::uint32_t zero = *b.parent().zero();
  const std::size_t zp = *b.zero_pos();
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t f = 0; f < k; ++f) {
      BitRow variant(b.omega_l_down().row(e), b.omega_l_down().words_per_row());
      variant &= b.omega_r_down().row(e);
      bool zero_prod = b.idem_product(e, f) == zero;
      if (zero_prod != variant.is_singleton(zp)) {
        rec.note = "variant reading wl(e) n wr(e) breaks the product-zero "
                   "equivalence here; implemented reading is wl(e) n wr(f)";
        rec.add_witness({{"e", b.element(e)}, {"f", b.element(f)}});
        return rec;
      }
    }
  }
  rec.note = "both readings satisfy the product-zero equivalence on this "
             "structure";
  return rec;
}

}  // namespace biorder
