#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace epdl {

/// Dynamically sized set of small integers (state ids), stored as 64-bit words.
///
/// Used both for uncertainty sets over a Kripke model and for label sets over
/// ETS states. Bits past size() are always zero.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);

  static StateSet full(std::size_t universe);
  static StateSet singleton(std::size_t universe, std::size_t member);

  std::size_t universe() const { return universe_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear();

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  bool is_subset_of(const StateSet& other) const;
  bool intersects(const StateSet& other) const;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  /// Removes every member of `other`.
  StateSet& subtract(const StateSet& other);
  StateSet complement() const;

  std::vector<std::size_t> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  std::size_t hash() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;
  friend std::strong_ordering operator<=>(const StateSet& a, const StateSet& b);

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
inline StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

/// Dense boolean matrix; row i is the successor set of i.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix diagonal(const StateSet& s);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool test(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  void set(std::size_t i, std::size_t j) { rows_[i].set(j); }
  void reset(std::size_t i, std::size_t j) { rows_[i].reset(j); }

  const StateSet& row(std::size_t i) const { return rows_[i]; }
  StateSet& row(std::size_t i) { return rows_[i]; }

  std::size_t count() const;
  bool any() const;

  BitMatrix& operator|=(const BitMatrix& other);
  /// Keeps only the columns in `keep` (right-multiplication by a diagonal).
  void mask_columns(const StateSet& keep);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<StateSet> rows_;
};

}  // namespace epdl

template <>
struct std::hash<epdl::StateSet> {
  std::size_t operator()(const epdl::StateSet& s) const { return s.hash(); }
};
