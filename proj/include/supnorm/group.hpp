#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace supnorm {

/// Element of PSL2(Z): an integer unimodular matrix modulo +-1.
///
/// The stored representative is canonical: c > 0, or c == 0 and d > 0.
/// Entries are 64-bit with overflow-checked arithmetic; every operation that
/// would leave the int64 range throws std::overflow_error instead of wrapping.
class GroupElement {
 public:
  using Int = std::int64_t;

  GroupElement() = default;

  /// Throws std::invalid_argument unless ad - bc == 1.
  GroupElement(Int a, Int b, Int c, Int d);

  static GroupElement identity() { return {}; }
  /// S = (0 -1; 1 0), z -> -1/z.
  static GroupElement S() { return {0, -1, 1, 0}; }
  /// T^n = (1 n; 0 1), z -> z + n.
  static GroupElement T(Int n = 1) { return {1, n, 0, 1}; }

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int d() const { return d_; }

  GroupElement inverse() const { return {d_, -b_, -c_, a_}; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);

  /// Lexicographic on the canonical quadruple (c, d, a, b).
  friend std::strong_ordering operator<=>(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  Int a_ = 1;
  Int b_ = 0;
  Int c_ = 0;
  Int d_ = 1;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

namespace detail {
GroupElement::Int checked_mul(GroupElement::Int x, GroupElement::Int y);
GroupElement::Int checked_add(GroupElement::Int x, GroupElement::Int y);
}  // namespace detail

}  // namespace supnorm
