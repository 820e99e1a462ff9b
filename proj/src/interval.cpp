#include "cquiver/interval.hpp"

namespace cquiver {

Endpoint Endpoint::gap(std::int64_t g, Rational offset) {
  if (!(Rational(0, 1) < offset && offset < Rational(1, 1))) {
    throw std::invalid_argument("gap offset must lie strictly between 0 and 1, got " +
                                offset.str());
  }
  return Endpoint(EndpointKind::Gap, g, offset);
}

Endpoint Endpoint::shifted(std::int64_t k) const {
  if (is_infinite()) return *this;
  return Endpoint(kind_, index_ + k, offset_);
}

std::string Endpoint::str() const {
  switch (kind_) {
    case EndpointKind::NegInf:
      return "-inf";
    case EndpointKind::PosInf:
      return "+inf";
    case EndpointKind::Grid:
      return "a" + std::to_string(index_);
    case EndpointKind::Gap:
      return "x" + std::to_string(index_) + "@" + offset_.str();
  }
  return {};
}

std::strong_ordering compare_endpoints(const Endpoint& p, const Endpoint& q) {
  auto rank = [](const Endpoint& e) {
    switch (e.kind()) {
      case EndpointKind::NegInf:
        return 0;
      case EndpointKind::PosInf:
        return 2;
      default:
        return 1;
    }
  };
  if (auto c = rank(p) <=> rank(q); c != 0) return c;
  if (p.is_infinite()) return std::strong_ordering::equal;

  // Grid(i) sits at (i, 0) and Gap(g, t) at (g, t) with 0 < t < 1.
  if (auto c = p.index() <=> q.index(); c != 0) return c;
  const Rational tp = p.kind() == EndpointKind::Grid ? Rational(0, 1) : p.offset();
  const Rational tq = q.kind() == EndpointKind::Grid ? Rational(0, 1) : q.offset();
  return tp <=> tq;
}

Interval::Interval(Endpoint lo, Boundary lo_b, Endpoint hi, Boundary hi_b)
    : lo_(lo), lo_b_(lo_b), hi_(hi), hi_b_(hi_b) {
  if (lo_.kind() == EndpointKind::PosInf || hi_.kind() == EndpointKind::NegInf) {
    throw std::invalid_argument("interval endpoints on the wrong infinite side");
  }
  if (lo_.is_infinite()) lo_b_ = Boundary::Open;
  if (hi_.is_infinite()) hi_b_ = Boundary::Open;
  const auto c = compare_endpoints(lo_, hi_);
  if (c > 0) throw std::invalid_argument("interval with lo > hi");
  if (c == 0 && !(lo_b_ == Boundary::Closed && hi_b_ == Boundary::Closed)) {
    throw std::invalid_argument("degenerate interval must be a closed point");
  }
}

Interval Interval::shifted(std::int64_t k) const {
  return Interval(lo_.shifted(k), lo_b_, hi_.shifted(k), hi_b_);
}

bool Interval::contains(const Interval& other) const {
  const auto lc = compare_endpoints(lo_, other.lo_);
  const bool left_ok = lc < 0 || (lc == 0 && (lo_closed() || !other.lo_closed()));
  const auto hc = compare_endpoints(other.hi_, hi_);
  const bool right_ok = hc < 0 || (hc == 0 && (hi_closed() || !other.hi_closed()));
  return left_ok && right_ok;
}

std::string Interval::str() const {
  return std::string(lo_closed() ? "[" : "(") + lo_.str() + "," + hi_.str() +
         (hi_closed() ? "]" : ")");
}

bool is_compatible(const Interval& i, const Interval& j) {
  if (i.contains(j) || j.contains(i)) return true;
  if (i.hi() < j.lo() || j.hi() < i.lo()) return true;
  if (compare_endpoints(i.hi(), j.lo()) == 0 && !i.hi_closed() && !j.lo_closed()) return true;
  if (compare_endpoints(j.hi(), i.lo()) == 0 && !j.hi_closed() && !i.lo_closed()) return true;
  return false;
}

bool is_rigid_list(std::span<const Interval> items) {
  for (std::size_t a = 0; a < items.size(); ++a) {
    for (std::size_t b = a + 1; b < items.size(); ++b) {
      if (!is_compatible(items[a], items[b])) return false;
    }
  }
  return true;
}

}  // namespace cquiver
