#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchkit/error.hpp"

namespace matchkit {

/// True iff `bits` is a Dyck word: even length, exactly half ones, and no
/// prefix holding more ones than zeros. Entries other than 0/1 make it false.
inline bool is_dyck_word(std::span<const std::uint8_t> bits) {
  if (bits.size() % 2 != 0) return false;
  long height = 0;
  for (auto b : bits) {
    if (b == 0) {
      ++height;
    } else if (b == 1) {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return height == 0;
}

namespace detail {

inline bool decode_step(char c, std::uint8_t& out) {
  switch (c) {
    case '0':
    case 'U':
    case 'u':
      out = 0;
      return true;
    case '1':
    case 'D':
    case 'd':
      out = 1;
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// Text form of is_dyck_word; accepts 0/1 or U/D letters.
inline bool is_dyck_word(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    std::uint8_t b = 0;
    if (!detail::decode_step(c, b)) return false;
    bits.push_back(b);
  }
  return is_dyck_word(bits);
}

/// A balanced binary word; 0 is an up-step (l-vertex), 1 a down-step
/// (r-vertex). Positions are 1-based in the accessors. Ordering is
/// lexicographic with 0 < 1.
class DyckWord {
 public:
  DyckWord() = default;

  static DyckWord from_bits(std::vector<std::uint8_t> bits) {
    if (!is_dyck_word(bits)) throw InvalidValue("not a Dyck word");
    DyckWord w;
    w.bits_ = std::move(bits);
    return w;
  }

  static DyckWord parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
      std::uint8_t b = 0;
      if (!detail::decode_step(c, b))
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' in Dyck word");
      bits.push_back(b);
    }
    if (!is_dyck_word(bits))
      throw ParseError("'" + std::string(text) + "' is not a Dyck word");
    DyckWord w;
    w.bits_ = std::move(bits);
    return w;
  }

  /// 0^m 1^m
  static DyckWord peak(int m) {
    std::vector<std::uint8_t> bits(2 * static_cast<std::size_t>(m), 0);
    for (int i = m; i < 2 * m; ++i) bits[i] = 1;
    return from_bits(std::move(bits));
  }

  /// (01)^m
  static DyckWord sawtooth(int m) {
    std::vector<std::uint8_t> bits;
    for (int i = 0; i < m; ++i) {
      bits.push_back(0);
      bits.push_back(1);
    }
    return from_bits(std::move(bits));
  }

  int length() const noexcept { return static_cast<int>(bits_.size()); }
  int semilength() const noexcept { return length() / 2; }
  bool empty() const noexcept { return bits_.empty(); }

  bool is_up(int pos) const { return bits_.at(pos - 1) == 0; }
  bool is_down(int pos) const { return bits_.at(pos - 1) == 1; }

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  /// Path heights after 0..2m steps.
  std::vector<int> heights() const {
    std::vector<int> h(bits_.size() + 1, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      h[i + 1] = h[i] + (bits_[i] == 0 ? 1 : -1);
    return h;
  }

  /// Ascending positions of the 0 entries (the l-vertices of any matching
  /// with this base).
  std::vector<int> up_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] == 0) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  std::vector<int> down_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] == 1) out.push_back(static_cast<int>(i) + 1);
    return out;
  }

  std::string str() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b == 0 ? '0' : '1');
    return s;
  }

  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;
  friend bool operator==(const DyckWord&, const DyckWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Reflection of the path: entry i of the result is 0 iff entry n-i+1 of
/// `w` is 1.
inline DyckWord mirror_word(const DyckWord& w) {
  const auto& b = w.bits();
  std::vector<std::uint8_t> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = static_cast<std::uint8_t>(1 - b[b.size() - 1 - i]);
  return DyckWord::from_bits(std::move(out));
}

}  // namespace matchkit
