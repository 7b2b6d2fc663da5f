#ifndef BIORDER_BITREL_HPP
#define BIORDER_BITREL_HPP

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace biorder {

// Square binary relation on {0..size-1}, one bit per pair, rows packed into
// 64-bit words. at(i, j) reads "i related-to j". All the biorder scans reduce
// to row AND/OR/subset operations here, so rows are the unit of work.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(std::size_t size)
      : size_(size), words_(word_count(size)), bits_(size * words_, 0) {}

  std::size_t size() const { return size_; }
  std::size_t words_per_row() const { return words_; }

  bool at(std::size_t i, std::size_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    row(i)[j >> 6] |= std::uint64_t{1} << (j & 63);
  }

  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  const std::uint64_t* row(std::size_t i) const {
    return bits_.data() + i * words_;
  }

  // {j : at(i,j)} ascending.
  std::vector<std::uint32_t> row_members(std::size_t i) const {
    std::vector<std::uint32_t> out;
    const std::uint64_t* r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        out.push_back(static_cast<std::uint32_t>((w << 6) + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  BitRel transposed() const {
    BitRel t(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      const std::uint64_t* r = row(i);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
          t.set((w << 6) + static_cast<std::size_t>(std::countr_zero(word)), i);
          word &= word - 1;
        }
      }
    }
    return t;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < size_; ++i)
      if (!at(i, i)) return false;
    return true;
  }

  // R transitive iff for every i and every j in row(i), row(j) subset row(i).
  // Returns false and reports the first witness (i, j, k) with iRj, jRk, !iRk.
  bool is_transitive(std::size_t* wi = nullptr, std::size_t* wj = nullptr,
                     std::size_t* wk = nullptr) const {
    for (std::size_t i = 0; i < size_; ++i) {
      const std::uint64_t* ri = row(i);
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t word = ri[w];
        while (word) {
          std::size_t j = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
          word &= word - 1;
          const std::uint64_t* rj = row(j);
          for (std::size_t v = 0; v < words_; ++v) {
            std::uint64_t missing = rj[v] & ~ri[v];
            if (missing) {
              if (wi) *wi = i;
              if (wj) *wj = j;
              if (wk) *wk = (v << 6) + static_cast<std::size_t>(std::countr_zero(missing));
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  friend bool operator==(const BitRel& a, const BitRel& b) {
    return a.size_ == b.size_ && a.bits_ == b.bits_;
  }

  static std::size_t word_count(std::size_t size) { return (size + 63) / 64; }

 private:
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Fixed-width row buffer for set algebra on rows of a BitRel.
class BitRow {
 public:
  BitRow() = default;
  BitRow(const std::uint64_t* src, std::size_t words) : w_(src, src + words) {}
  explicit BitRow(std::size_t words) : w_(words, 0) {}

  std::size_t words() const { return w_.size(); }
  std::uint64_t* data() { return w_.data(); }
  const std::uint64_t* data() const { return w_.data(); }

  BitRow& operator&=(const std::uint64_t* other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other[i];
    return *this;
  }
  BitRow& operator|=(const std::uint64_t* other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other[i];
    return *this;
  }

  bool test(std::size_t j) const { return (w_[j >> 6] >> (j & 63)) & 1u; }
  void set(std::size_t j) { w_[j >> 6] |= std::uint64_t{1} << (j & 63); }
  void reset(std::size_t j) { w_[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // True iff the set is exactly {j}.
  bool is_singleton(std::size_t j) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t expect = (i == (j >> 6)) ? (std::uint64_t{1} << (j & 63)) : 0;
      if (w_[i] != expect) return false;
    }
    return true;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t word = w_[i];
      while (word) {
        out.push_back(static_cast<std::uint32_t>((i << 6) + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> w_;
};

}  // namespace biorder

#endif  // BIORDER_BITREL_HPP
