#pragma once

// Type-alpha representations of the periodic real line.
//
// The grid a_0 = 0 < a_1 < ... < a_{n-1} < 1 repeats with period 1, so
// a_{i+n} = a_i + 1.  A type-alpha representation consists of finitely many
// grid-ended interval orbits plus, for every gap (a_s, a_{s+1}), one twin
// family
//
//   right:  (+)_{x in gap} T_[x, far|  (+)  T_(x, far|
//   left:   (+)_{x in gap} T_|far, x)  (+)  T_|far, x]
//
// whose far end is a grid point or infinite.  Families are stored by their
// parameters only.  Reduction to the doubled lattice sends a_i to 2i and the
// midpoint of (a_i, a_{i+1}) to 2i+1; families vanish under it.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cquiver/binomial.hpp"
#include "cquiver/equivariant.hpp"
#include "cquiver/interval.hpp"

namespace cquiver {

struct AlphaGrid {
  int n = 1;
  /// a_0 .. a_{n-1}; display only, all logic runs on indices.
  std::vector<Rational> positions;

  /// Evenly spaced grid i/n.
  static AlphaGrid uniform(int n);
  void validate() const;
};

/// Interval with grid endpoints, stored modulo the index shift i -> i+n.
struct GridIntervalOrbit {
  static constexpr std::int64_t kNegInf = DiscreteInterval::kNegInf;
  static constexpr std::int64_t kPosInf = DiscreteInterval::kPosInf;

  std::int64_t lo = 0;
  Boundary lo_b = Boundary::Closed;
  std::int64_t hi = 0;
  Boundary hi_b = Boundary::Closed;

  bool lo_infinite() const { return lo == kNegInf; }
  bool hi_infinite() const { return hi == kPosInf; }

  /// The concrete interval translated by k grid steps.  Throws
  /// std::invalid_argument when the fields are not a valid interval.
  Interval at(std::int64_t k = 0) const;

  /// Shift so the finite lower end (or, for left rays, the upper end) lies
  /// in [0, n); infinite ends become Open.
  GridIntervalOrbit normalized(int n) const;

  friend auto operator<=>(const GridIntervalOrbit&, const GridIntervalOrbit&) = default;
};

enum class Direction : std::uint8_t { Left, Right };

struct FamilySpec {
  std::int64_t gap = 0;
  Direction dir = Direction::Right;
  /// Grid point or infinity for valid representations; other endpoints are
  /// accepted so that invalid input can be reported.
  Endpoint far = Endpoint::grid(1);
  Boundary far_b = Boundary::Open;

  /// The two family members at the gap point `x`.  Throws
  /// std::invalid_argument if they are not valid intervals.
  std::vector<Interval> members_at(const Endpoint& x) const;
};

bool operator==(const FamilySpec& a, const FamilySpec& b);
bool operator<(const FamilySpec& a, const FamilySpec& b);

struct AlphaRep {
  AlphaGrid grid;
  std::vector<GridIntervalOrbit> orbits;
  std::vector<FamilySpec> families;

  int n() const { return grid.n; }

  /// Orbits normalized, sorted and deduplicated; families sorted by gap.
  AlphaRep canonical() const;
};

bool operator==(const AlphaRep& a, const AlphaRep& b);
bool operator<(const AlphaRep& a, const AlphaRep& b);

struct AlphaValidation {
  bool ok = true;
  std::string violation;
  std::optional<std::int64_t> gap;
};

/// Re-derives the endpoint sets phi^{r/l}_{1..4} at two points of every gap
/// and checks the type-alpha conditions.  Reports the first violation.
AlphaValidation validate_type_alpha(const AlphaRep& r);

/// Default family sample points inside each gap.
inline const std::vector<Rational>& default_sample_offsets() {
  static const std::vector<Rational> offsets = {Rational(1, 3), Rational(2, 3)};
  return offsets;
}

/// Pairwise compatibility of all grid orbits and sampled family members
/// under all relevant translations.
bool alpha_is_rigid(const AlphaRep& r,
                    const std::vector<Rational>& sample_offsets = default_sample_offsets());

/// Lattice image of a single grid interval: closed a_i -> 2i, open left end
/// a_i -> 2i+1, open right end a_j -> 2j-1.
DiscreteInterval lattice_image(const GridIntervalOrbit& o);
/// Inverse of lattice_image.
GridIntervalOrbit grid_preimage(const DiscreteInterval& iv);

/// Reduction to the doubled lattice with period 2n.
OrbitSet tau(const AlphaRep& r);

/// Thrown when a fiber does not have the expected shape.
class FiberAnomaly : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All type-alpha representations over a maximal rigid lattice set: one per
/// choice of direction in every gap, 2^n in total.
std::vector<AlphaRep> expand_fibers(const OrbitSet& lattice, const AlphaGrid& grid);

/// Every maximal rigid type-alpha representation for n grid points per
/// period, canonically sorted.
std::vector<AlphaRep> enumerate_alpha(int n, int jobs = 1);

enum class CountMode { Formula, Enumerate };

BigInt count_alpha(int n, CountMode mode, int jobs = 1);

}  // namespace cquiver
