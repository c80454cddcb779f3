#include "epdl/bits.hpp"

#include <algorithm>
#include <bit>

namespace epdl {

StateSet::StateSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

StateSet StateSet::singleton(std::size_t universe, std::size_t member) {
  StateSet s(universe);
  s.set(member);
  return s;
}

void StateSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

bool StateSet::any() const {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::size_t StateSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool StateSet::intersects(const StateSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

StateSet& StateSet::subtract(const StateSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

StateSet StateSet::complement() const {
  StateSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  out.trim();
  return out;
}

std::vector<std::size_t> StateSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t StateSet::hash() const {
  // FNV-1a over the words, seeded with the universe size.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const StateSet& a, const StateSet& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return a.words_ <=> b.words_;
}

void StateSet::trim() {
  const std::size_t tail = universe_ & 63;
  if (tail != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << tail) - 1;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, StateSet(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::diagonal(const StateSet& s) {
  BitMatrix m(s.universe(), s.universe());
  s.for_each([&](std::size_t i) { m.set(i, i); });
  return m;
}

std::size_t BitMatrix::count() const {
  std::size_t c = 0;
  for (const auto& r : rows_) c += r.count();
  return c;
}

bool BitMatrix::any() const {
  return std::any_of(rows_.begin(), rows_.end(),
                     [](const StateSet& r) { return r.any(); });
}

BitMatrix& BitMatrix::operator|=(const BitMatrix& other) {
  for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= other.rows_[i];
  return *this;
}

void BitMatrix::mask_columns(const StateSet& keep) {
  for (auto& r : rows_) r &= keep;
}

}  // namespace epdl
