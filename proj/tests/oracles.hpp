// Test-only oracles, independent of the library's computation paths:
// matrix arithmetic done entry-by-entry on decoded matrices, counting
// formulas, naive path enumeration for distances, and the subspace lattice
// of F_q^n built from vector sets. These never touch the packed GF(2)
// product or the bit-relation machinery they are used to check.
#ifndef BIORDER_TESTS_ORACLES_HPP
#define BIORDER_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

// ---- naive matrix arithmetic over F_q, element = base-q digit index ----

struct NaiveMatrix {
  int n;
  std::uint32_t q;
  std::vector<std::uint32_t> a;  // row-major, size n*n

  static NaiveMatrix decode(int n, std::uint32_t q, std::uint64_t idx) {
    NaiveMatrix m{n, q, std::vector<std::uint32_t>(n * n)};
    for (int d = 0; d < n * n; ++d) {
      m.a[d] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
    return m;
  }

  std::uint64_t encode() const {
    std::uint64_t idx = 0;
    for (int d = n * n - 1; d >= 0; --d) idx = idx * q + a[d];
    return idx;
  }

  NaiveMatrix mul(const NaiveMatrix& o) const {
    NaiveMatrix r{n, q, std::vector<std::uint32_t>(n * n, 0)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < n; ++k) s += a[i * n + k] * o.a[k * n + j];
        r.a[i * n + j] = static_cast<std::uint32_t>(s % q);
      }
    return r;
  }
};

inline std::uint64_t naive_mul(int n, std::uint32_t q, std::uint64_t x,
                               std::uint64_t y) {
  return NaiveMatrix::decode(n, q, x).mul(NaiveMatrix::decode(n, q, y)).encode();
}

// brute-force idempotent scan with the naive product
inline std::vector<std::uint64_t> naive_idempotents(int n, std::uint32_t q) {
  std::uint64_t order = 1;
  for (int d = 0; d < n * n; ++d) order *= q;
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < order; ++x)
    if (naive_mul(n, q, x, x) == x) out.push_back(x);
  return out;
}

// ---- counting formulas ----

inline std::uint64_t gaussian_binomial(int n, int r, std::uint64_t q) {
  // product form; exact for the sizes used in tests
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    std::uint64_t qp = 1;
    for (int t = 0; t < n - i; ++t) qp *= q;
    num *= qp - 1;
    std::uint64_t qd = 1;
    for (int t = 0; t < i + 1; ++t) qd *= q;
    den *= qd - 1;
  }
  return den == 0 ? 1 : num / den;
}

inline std::uint64_t idempotent_count_formula(int n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (int r = 0; r <= n; ++r) {
    std::uint64_t pw = 1;
    for (int t = 0; t < r * (n - r); ++t) pw *= q;
    total += gaussian_binomial(n, r, q) * pw;
  }
  return total;
}

inline std::uint64_t subspace_count_formula(int n, std::uint64_t q) {
  std::uint64_t total = 0;
  for (int r = 0; r <= n; ++r) total += gaussian_binomial(n, r, q);
  return total;
}

// ---- naive shortest E-sequence by breadth-first path enumeration over
// explicit adjacency lists (no bitsets, no multi-source tricks) ----

struct NaiveSequenceOracle {
  // adjacency[v] = vertices one L-step or R-step away (including v itself)
  std::vector<std::vector<int>> l_adj, r_adj;

  int shortest(int from, int to, int first_rel /*0=any,1=L,2=R*/) const {
    // states are (vertex, steps); first transition restricted when asked
    std::size_t k = l_adj.size();
    std::vector<int> dist(k, -1);
    std::vector<int> frontier;
    auto starts = [&](int rel) {
      const auto& adj = rel == 1 ? l_adj : r_adj;
      for (int w : adj[from])
        if (dist[w] < 0) {
          dist[w] = 1;
          frontier.push_back(w);
        }
    };
    if (first_rel == 0 || first_rel == 1) starts(1);
    if (first_rel == 0 || first_rel == 2) starts(2);
    int level = 1;
    while (!frontier.empty()) {
      if (dist[to] > 0) break;
      std::vector<int> next;
      for (int v : frontier) {
        for (const auto* adj : {&l_adj, &r_adj})
          for (int w : (*adj)[v])
            if (dist[w] < 0) {
              dist[w] = level + 1;
              next.push_back(w);
            }
      }
      frontier = std::move(next);
      ++level;
    }
    return dist[to] < 0 ? 0 : dist[to];
  }
};

// ---- subspaces of F_q^n as sorted vector sets (vectors encoded base-q) ----

inline std::vector<std::uint32_t> span_closure(
    int n, std::uint32_t q, std::vector<std::uint32_t> gens) {
  auto decode = [&](std::uint32_t v) {
    std::vector<std::uint32_t> x(n);
    for (int i = 0; i < n; ++i) {
      x[i] = v % q;
      v /= q;
    }
    return x;
  };
  auto encode = [&](const std::vector<std::uint32_t>& x) {
    std::uint32_t v = 0;
    for (int i = n - 1; i >= 0; --i) v = v * q + x[i];
    return v;
  };
  std::set<std::uint32_t> span = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint32_t> cur(span.begin(), span.end());
    for (std::uint32_t s : cur)
      for (std::uint32_t g : gens)
        for (std::uint32_t c = 0; c < q; ++c) {
          auto xs = decode(s), xg = decode(g);
          for (int i = 0; i < n; ++i) xs[i] = (xs[i] + c * xg[i]) % q;
          if (span.insert(encode(xs)).second) grew = true;
        }
  }
  return {span.begin(), span.end()};
}

// row space of an idempotent given by its index
inline std::vector<std::uint32_t> row_space(int n, std::uint32_t q,
                                            std::uint64_t idx) {
  NaiveMatrix m = NaiveMatrix::decode(n, q, idx);
  std::vector<std::uint32_t> rows;
  for (int i = 0; i < n; ++i) {
    std::uint32_t v = 0;
    for (int j = n - 1; j >= 0; --j) v = v * q + m.a[i * n + j];
    rows.push_back(v);
  }
  return span_closure(n, q, rows);
}

}  // namespace oracle

#endif  // BIORDER_TESTS_ORACLES_HPP
