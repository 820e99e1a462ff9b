#pragma once

// Symbolic intervals on the real line.  Finite endpoints are either grid
// points a_i or interior points of a gap (a_g, a_{g+1}) given by a rational
// offset in (0,1).  Only the relative order of endpoints matters, so no
// floating point is involved anywhere.

#include <compare>
#include <cstdint>
#include <span>
#include <string>

#include "cquiver/rational.hpp"

namespace cquiver {

enum class EndpointKind : std::uint8_t { NegInf, Grid, Gap, PosInf };

class Endpoint {
 public:
  static Endpoint neg_inf() { return Endpoint(EndpointKind::NegInf, 0, {}); }
  static Endpoint pos_inf() { return Endpoint(EndpointKind::PosInf, 0, {}); }
  static Endpoint grid(std::int64_t i) { return Endpoint(EndpointKind::Grid, i, {}); }
  /// Point of the open gap (a_g, a_{g+1}); `offset` must lie strictly in (0,1).
  static Endpoint gap(std::int64_t g, Rational offset);

  EndpointKind kind() const { return kind_; }
  bool is_infinite() const {
    return kind_ == EndpointKind::NegInf || kind_ == EndpointKind::PosInf;
  }
  /// Grid index for Grid, gap index for Gap; 0 for infinities.
  std::int64_t index() const { return index_; }
  const Rational& offset() const { return offset_; }

  /// Translate by `k` grid steps; infinities are fixed.
  Endpoint shifted(std::int64_t k) const;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;

  std::string str() const;

 private:
  Endpoint(EndpointKind kind, std::int64_t index, Rational offset)
      : kind_(kind), index_(index), offset_(offset) {}

  EndpointKind kind_;
  std::int64_t index_;
  Rational offset_;
};

std::strong_ordering compare_endpoints(const Endpoint& p, const Endpoint& q);

inline bool operator<(const Endpoint& p, const Endpoint& q) {
  return compare_endpoints(p, q) < 0;
}

enum class Boundary : std::uint8_t { Open, Closed };

class Interval {
 public:
  /// Throws std::invalid_argument when the endpoints do not describe a
  /// nonempty interval.  Infinite ends are normalized to Open.
  Interval(Endpoint lo, Boundary lo_b, Endpoint hi, Boundary hi_b);

  const Endpoint& lo() const { return lo_; }
  const Endpoint& hi() const { return hi_; }
  Boundary lo_b() const { return lo_b_; }
  Boundary hi_b() const { return hi_b_; }
  bool lo_closed() const { return lo_b_ == Boundary::Closed; }
  bool hi_closed() const { return hi_b_ == Boundary::Closed; }

  Interval shifted(std::int64_t k) const;

  /// Point-set containment, boundary aware.
  bool contains(const Interval& other) const;

  friend bool operator==(const Interval&, const Interval&) = default;

  std::string str() const;

 private:
  Endpoint lo_;
  Boundary lo_b_;
  Endpoint hi_;
  Boundary hi_b_;
};

/// The four-way compatibility test: nesting, separation by a gap, or
/// touching at a common endpoint that both intervals leave open.
bool is_compatible(const Interval& i, const Interval& j);

/// Pairwise compatibility over a finite list; repeated entries are allowed.
bool is_rigid_list(std::span<const Interval> items);

}  // namespace cquiver
