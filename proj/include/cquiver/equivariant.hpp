#pragma once

// Shift-orbits of interval modules on the integer lattice with period m, and
// the maximal rigid sets of such orbits.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cquiver/ext.hpp"

namespace cquiver {

enum class OrbitKind : std::uint8_t { LeftRay = 0, RightRay = 1, Finite = 2 };

/// Orbit of [a, a+len-1], (-inf, d] or [c, +inf) under translation by m.
/// The anchor (a, d or c) is kept in [0, m).
class OrbitInterval {
 public:
  static OrbitInterval finite(int m, std::int64_t a, std::int64_t len);
  static OrbitInterval left_ray(int m, std::int64_t d);
  static OrbitInterval right_ray(int m, std::int64_t c);
  /// Orbit of an arbitrary lattice interval; throws for (-inf, +inf).
  static OrbitInterval of(int m, const DiscreteInterval& iv);

  int period() const { return m_; }
  OrbitKind kind() const { return kind_; }
  std::int64_t anchor() const { return anchor_; }
  /// Number of lattice points for Finite, 0 for rays.
  std::int64_t length() const { return len_; }
  bool is_ray() const { return kind_ != OrbitKind::Finite; }

  /// Canonical representative (anchor in [0, m)).
  DiscreteInterval representative() const;

  /// Rays first, then (kind, anchor, length).
  friend std::strong_ordering operator<=>(const OrbitInterval& a, const OrbitInterval& b);
  friend bool operator==(const OrbitInterval&, const OrbitInterval&) = default;

  std::string str() const;

 private:
  OrbitInterval(int m, OrbitKind kind, std::int64_t anchor, std::int64_t len);

  int m_;
  OrbitKind kind_;
  std::int64_t anchor_;
  std::int64_t len_;
};

/// Sorted, duplicate-free set of orbits with a common period.
class OrbitSet {
 public:
  OrbitSet(int m, std::vector<OrbitInterval> orbits);

  int period() const { return m_; }
  const std::vector<OrbitInterval>& orbits() const { return orbits_; }
  std::size_t size() const { return orbits_.size(); }

  bool has_left_ray() const;
  bool has_right_ray() const;

  friend std::strong_ordering operator<=>(const OrbitSet& a, const OrbitSet& b);
  friend bool operator==(const OrbitSet&, const OrbitSet&) = default;

  std::string str() const;

 private:
  int m_;
  std::vector<OrbitInterval> orbits_;
};

/// Some translate of `b` has a nonzero Ext^1 with `a`, in either direction.
/// Throws std::invalid_argument on a period mismatch.
bool orbit_obstructed(const OrbitInterval& a, const OrbitInterval& b);

/// No nonzero translate of `o` extends `o`.
bool self_rigid(const OrbitInterval& o);

/// All maximal rigid orbit sets for period m, canonically sorted.  The
/// search runs on up to `jobs` threads; the result does not depend on it.
std::vector<OrbitSet> enumerate_maximal_rigid(int m, int jobs = 1);

/// The finite candidate pool: every self-rigid orbit, canonically sorted.
std::vector<OrbitInterval> candidate_pool(int m);

/// Reflection i -> -i.  Swaps left and right rays.
OrbitInterval star(const OrbitInterval& o);
OrbitSet star(const OrbitSet& s);

/// The equivalent representation of the cyclic quiver on m vertices.
/// Throws std::invalid_argument("infinite-dimensional fold") for rays.
RepSpec fold_to_cyclic(const OrbitInterval& o, int prime = 2);
RepSpec fold_to_cyclic(const OrbitSet& s, int prime = 2);

}  // namespace cquiver
