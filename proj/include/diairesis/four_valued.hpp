#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace diairesis {

// The four determination values. Each value is a subset of the classical
// pair {0, 1}; the encoding stores that subset directly as a two-bit mask
// (bit 0 = "contains 0", bit 1 = "contains 1"), so the knowledge lattice
// below is plain set algebra on the masks.
enum class Value : std::uint8_t {
  N = 0b00,  // none          {}
  F = 0b01,  // indetermined  {0}
  T = 0b10,  // determined    {1}
  B = 0b11,  // both          {0, 1}
};

inline constexpr std::array<Value, 4> all_values{Value::N, Value::F, Value::T,
                                                 Value::B};

namespace detail {

constexpr std::size_t vidx(Value v) { return static_cast<std::size_t>(v); }

// Connective tables, indexed [first][second] in N, F, T, B order.
// These tables are the definition of the logic; the algebraic laws they
// happen to satisfy are asserted in tests, never assumed here. N is a
// two-sided identity for both connectives, and on {F, B, T} conjunction
// and disjunction are min and max of the chain F < B < T. Note b/n rows:
// this is not Belnap's FOUR (there b AND n = f).
inline constexpr std::array<Value, 4> neg_table{
    Value::N, Value::T, Value::F, Value::B};

inline constexpr std::array<std::array<Value, 4>, 4> conj_table{{
    //        N         F         T         B
    {Value::N, Value::F, Value::T, Value::B},  // N
    {Value::F, Value::F, Value::F, Value::F},  // F
    {Value::T, Value::F, Value::T, Value::B},  // T
    {Value::B, Value::F, Value::B, Value::B},  // B
}};

inline constexpr std::array<std::array<Value, 4>, 4> disj_table{{
    //        N         F         T         B
    {Value::N, Value::F, Value::T, Value::B},  // N
    {Value::F, Value::F, Value::T, Value::B},  // F
    {Value::T, Value::T, Value::T, Value::T},  // T
    {Value::B, Value::B, Value::T, Value::B},  // B
}};

}  // namespace detail

constexpr Value neg(Value v) { return detail::neg_table[detail::vidx(v)]; }

constexpr Value conj(Value a, Value b) {
  return detail::conj_table[detail::vidx(a)][detail::vidx(b)];
}

constexpr Value disj(Value a, Value b) {
  return detail::disj_table[detail::vidx(a)][detail::vidx(b)];
}

// -- the subset view ---------------------------------------------------

inline std::vector<int> to_subset(Value v) {
  std::vector<int> s;
  const auto mask = detail::vidx(v);
  if (mask & 0b01) s.push_back(0);
  if (mask & 0b10) s.push_back(1);
  return s;
}

inline Value from_subset(std::span<const int> bits) {
  unsigned mask = 0;
  for (int b : bits) {
    if (b != 0 && b != 1)
      throw std::invalid_argument("subset element outside {0,1}: " +
                                  std::to_string(b));
    mask |= b == 0 ? 0b01u : 0b10u;
  }
  return static_cast<Value>(mask);
}

inline Value from_subset(std::initializer_list<int> bits) {
  return from_subset(std::span<const int>(bits.begin(), bits.size()));
}

// -- the knowledge (powerset) lattice ----------------------------------

constexpr bool knowledge_leq(Value a, Value b) {
  return (detail::vidx(a) & detail::vidx(b)) == detail::vidx(a);
}

constexpr Value knowledge_join(Value a, Value b) {
  return static_cast<Value>(detail::vidx(a) | detail::vidx(b));
}

constexpr Value knowledge_meet(Value a, Value b) {
  return static_cast<Value>(detail::vidx(a) & detail::vidx(b));
}

// Two-valued logic sits inside the four values as {T, F}, which is closed
// under all three connectives and reproduces the Boolean tables there.
constexpr Value embed_classical(bool b) { return b ? Value::T : Value::F; }

// -- display ------------------------------------------------------------

constexpr char to_letter(Value v) {
  switch (v) {
    case Value::T: return 't';
    case Value::F: return 'f';
    case Value::B: return 'b';
    case Value::N: return 'n';
  }
  return '?';
}

constexpr std::string_view to_name(Value v) {
  switch (v) {
    case Value::T: return "determined";
    case Value::F: return "indetermined";
    case Value::B: return "both";
    case Value::N: return "none";
  }
  return "?";
}

inline Value value_from_letter(char c) {
  switch (c) {
    case 't': return Value::T;
    case 'f': return Value::F;
    case 'b': return Value::B;
    case 'n': return Value::N;
    default:
      throw std::invalid_argument(std::string("no determination value named '") +
                                  c + "'");
  }
}

}  // namespace diairesis
