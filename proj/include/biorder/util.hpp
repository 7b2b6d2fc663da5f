#ifndef BIORDER_UTIL_HPP
#define BIORDER_UTIL_HPP

#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace biorder {

enum class Side { left, right };

inline const char* side_name(Side s) {
  return s == Side::left ? "left" : "right";
}

// Invalid user input (ring spec, CLI flags, malformed files). CLI maps this
// to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested computation exceeds the configured budget. CLI exit code 3.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic RNG used by every sampled check. mt19937_64 has a
// standard-mandated output sequence, and we avoid std::uniform_int_distribution
// and std::shuffle on purpose: their outputs are implementation-defined, which
// would break the byte-identical-report guarantee across toolchains.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform-ish value in [0, n). Modulo bias is irrelevant at our sizes and
  // keeps the sequence reproducible everywhere.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Worker count: BIORDER_WORKERS env var wins, else hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("BIORDER_WORKERS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Static range partition over [begin, end). fn(i) must only write state owned
// by index i so the result is independent of the worker count.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn,
                  unsigned workers = 0) {
  if (workers == 0) workers = worker_count();
  std::size_t n = end > begin ? end - begin : 0;
  if (n == 0) return;
  if (workers <= 1 || n < 2 * workers) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = begin + w * chunk;
    std::size_t hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace biorder

#endif  // BIORDER_UTIL_HPP
