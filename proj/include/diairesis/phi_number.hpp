#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "diairesis/errors.hpp"
#include "diairesis/four_valued.hpp"
#include "diairesis/rational.hpp"

namespace diairesis {

// The binary path code of a branch in a division tree. The leading bit is
// always 1 and marks the undivided root concept; every bit after it records
// one division step, 1 for the affirmed side and 0 for its complement.
class PhiNumber {
 public:
  PhiNumber() : bits_("1") {}

  static PhiNumber root() { return PhiNumber(); }

  static PhiNumber from_bits(std::string_view bits) {
    if (bits.empty() || bits.front() != '1')
      throw std::invalid_argument("phi-number must begin with bit 1");
    for (char c : bits)
      if (c != '0' && c != '1')
        throw std::invalid_argument("phi-number contains a non-bit character");
    PhiNumber phi;
    phi.bits_ = bits;
    return phi;
  }

  PhiNumber child(bool positive) const {
    PhiNumber next = *this;
    next.bits_ += positive ? '1' : '0';
    return next;
  }

  const std::string& bits() const { return bits_; }

  // everything after the leading root bit
  std::string_view decision_bits() const {
    return std::string_view(bits_).substr(1);
  }

  std::size_t generation() const { return bits_.size() - 1; }

  friend bool operator==(const PhiNumber& a, const PhiNumber& b) = default;

 private:
  std::string bits_;
};

// Decimal reading of the full bit string, root bit included.
inline std::uint64_t phi_decimal(const PhiNumber& phi) {
  if (phi.bits().size() > 63)
    throw CapacityError("phi-number longer than 63 bits");
  std::uint64_t value = 0;
  for (char c : phi.bits()) value = (value << 1) | (c == '1' ? 1u : 0u);
  return value;
}

// First-differences order: compare bitwise from the left with 0 < 1; a
// proper prefix precedes all of its extensions. Totally orders all branches
// across generations.
inline std::strong_ordering lex_compare(const PhiNumber& a, const PhiNumber& b) {
  return a.bits() <=> b.bits();
}

inline std::strong_ordering operator<=>(const PhiNumber& a, const PhiNumber& b) {
  return lex_compare(a, b);
}

// Verdict on a single branch: N when nothing has been divided yet, T when
// every division step affirmed (the all-ones path), F as soon as one step
// went to the complement side.
inline Value branch_determination(const PhiNumber& phi) {
  if (phi.generation() == 0) return Value::N;
  for (char c : phi.decision_bits())
    if (c == '0') return Value::F;
  return Value::T;
}

// Fraction of affirmed steps among the decision bits, as an exact rational.
// Undefined on the bare root, which has made no decision at all.
inline Rational fuzzy_determination(const PhiNumber& phi) {
  if (phi.generation() == 0)
    throw std::invalid_argument(
        "fuzzy determination is undefined for the undivided root");
  std::int64_t ones = 0;
  for (char c : phi.decision_bits()) ones += c == '1';
  return Rational(ones, static_cast<std::int64_t>(phi.generation()));
}

}  // namespace diairesis
