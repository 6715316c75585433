#include "gclr/core/entity_set.hpp"

#include <algorithm>

namespace gclr::core {

EntitySet::EntitySet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

EntitySet EntitySet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  EntitySet s(universe);
  for (auto i : members) s.insert(i);
  return s;
}

EntitySet EntitySet::from(std::size_t universe, std::span<const std::size_t> members) {
  EntitySet s(universe);
  for (auto i : members) s.insert(i);
  return s;
}

EntitySet EntitySet::full(std::size_t universe) {
  EntitySet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

std::size_t EntitySet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EntitySet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<std::size_t> EntitySet::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool EntitySet::intersects(const EntitySet& other) const noexcept {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

bool EntitySet::is_subset_of(const EntitySet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t o = w < other.words_.size() ? other.words_[w] : 0;
    if (words_[w] & ~o) return false;
  }
  return true;
}

EntitySet& EntitySet::operator|=(const EntitySet& other) noexcept {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w)
    words_[w] |= other.words_[w];
  return *this;
}

EntitySet& EntitySet::operator&=(const EntitySet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
  return *this;
}

EntitySet& EntitySet::operator-=(const EntitySet& other) noexcept {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w)
    words_[w] &= ~other.words_[w];
  return *this;
}

std::size_t EntitySet::hash() const noexcept {
  // FNV-1a over the words, mixed with the universe size.
  std::uint64_t h = 14695981039346656037ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::string EntitySet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

EntitySet operator|(EntitySet a, const EntitySet& b) {
  a |= b;
  return a;
}

EntitySet operator-(EntitySet a, const EntitySet& b) {
  a -= b;
  return a;
}

bool lex_less(const EntitySet& a, const EntitySet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace gclr::core
