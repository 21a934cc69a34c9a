#include "supnorm/group.hpp"

#include <ostream>
#include <sstream>

namespace supnorm {

namespace detail {

GroupElement::Int checked_mul(GroupElement::Int x, GroupElement::Int y) {
  GroupElement::Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("group element entry overflows int64");
  return r;
}

GroupElement::Int checked_add(GroupElement::Int x, GroupElement::Int y) {
  GroupElement::Int r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("group element entry overflows int64");
  return r;
}

}  // namespace detail

GroupElement::GroupElement(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
  using detail::checked_mul;
  if (checked_mul(a, d) - checked_mul(b, c) != 1) {
    throw std::invalid_argument("group element must have determinant 1");
  }
  canonicalize();
}

void GroupElement::canonicalize() {
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  using detail::checked_add;
  using detail::checked_mul;
  GroupElement r;
  r.a_ = checked_add(checked_mul(g.a_, h.a_), checked_mul(g.b_, h.c_));
  r.b_ = checked_add(checked_mul(g.a_, h.b_), checked_mul(g.b_, h.d_));
  r.c_ = checked_add(checked_mul(g.c_, h.a_), checked_mul(g.d_, h.c_));
  r.d_ = checked_add(checked_mul(g.c_, h.b_), checked_mul(g.d_, h.d_));
  r.canonicalize();
  return r;
}

std::strong_ordering operator<=>(const GroupElement& g, const GroupElement& h) {
  if (auto o = g.c_ <=> h.c_; o != 0) return o;
  if (auto o = g.d_ <=> h.d_; o != 0) return o;
  if (auto o = g.a_ <=> h.a_; o != 0) return o;
  return g.b_ <=> h.b_;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << '(' << g.a() << ' ' << g.b() << "; " << g.c() << ' ' << g.d() << ')';
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  // splitmix-style mixing of the four entries
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  std::uint64_t h = 0;
  h = mix(h, static_cast<std::uint64_t>(g.a()));
  h = mix(h, static_cast<std::uint64_t>(g.b()));
  h = mix(h, static_cast<std::uint64_t>(g.c()));
  h = mix(h, static_cast<std::uint64_t>(g.d()));
  return static_cast<std::size_t>(h);
}

}  // namespace supnorm
