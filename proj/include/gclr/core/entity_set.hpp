#pragma once

#include <bit>
#include <boost/container/small_vector.hpp>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gclr::core {

// Subset of {0, ..., universe-1}, stored as a bitset. Used for clusters,
// columns and cache keys.
class EntitySet {
 public:
  EntitySet() = default;
  explicit EntitySet(std::size_t universe);

  static EntitySet of(std::size_t universe, std::initializer_list<std::size_t> members);
  static EntitySet from(std::size_t universe, std::span<const std::size_t> members);
  static EntitySet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::vector<std::size_t> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  bool intersects(const EntitySet& other) const noexcept;
  bool is_subset_of(const EntitySet& other) const noexcept;

  EntitySet& operator|=(const EntitySet& other) noexcept;
  EntitySet& operator&=(const EntitySet& other) noexcept;
  EntitySet& operator-=(const EntitySet& other) noexcept;

  friend bool operator==(const EntitySet& a, const EntitySet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return {words_.data(), words_.size()}; }

 private:
  std::size_t universe_ = 0;
  // Inline storage up to 128 entities, so copies in hot loops do not allocate.
  boost::container::small_vector<std::uint64_t, 2> words_;
};

EntitySet operator|(EntitySet a, const EntitySet& b);
EntitySet operator-(EntitySet a, const EntitySet& b);

// Lexicographic order on the sorted member lists; the deterministic
// tie-break used by pricing and enumeration.
bool lex_less(const EntitySet& a, const EntitySet& b);

struct EntitySetHash {
  std::size_t operator()(const EntitySet& s) const noexcept { return s.hash(); }
};

}  // namespace gclr::core
