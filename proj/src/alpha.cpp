#include "cquiver/alpha.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "parallel.hpp"

namespace cquiver {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Endpoint grid_or_infinite(std::int64_t i) {
  if (i == GridIntervalOrbit::kNegInf) return Endpoint::neg_inf();
  if (i == GridIntervalOrbit::kPosInf) return Endpoint::pos_inf();
  return Endpoint::grid(i);
}

bool is_grid_or_infinite(const Endpoint& e) {
  return e.kind() != EndpointKind::Gap;
}

int compare_families(const FamilySpec& a, const FamilySpec& b) {
  if (a.gap != b.gap) return a.gap < b.gap ? -1 : 1;
  if (a.dir != b.dir) return a.dir < b.dir ? -1 : 1;
  if (auto c = compare_endpoints(a.far, b.far); c != 0) return c < 0 ? -1 : 1;
  if (a.far_b != b.far_b) return a.far_b < b.far_b ? -1 : 1;
  return 0;
}

}  // namespace

AlphaGrid AlphaGrid::uniform(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  AlphaGrid g{n, {}};
  for (int i = 0; i < n; ++i) g.positions.emplace_back(i, n);
  return g;
}

void AlphaGrid::validate() const {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (positions.empty()) return;
  if (static_cast<int>(positions.size()) != n) {
    throw std::invalid_argument("grid needs exactly n positions");
  }
  if (positions.front() != Rational(0, 1)) throw std::invalid_argument("grid must start at 0");
  for (int i = 1; i < n; ++i) {
    if (!(positions[i - 1] < positions[i])) {
      throw std::invalid_argument("grid positions must increase");
    }
  }
  if (!(positions.back() < Rational(1, 1))) {
    throw std::invalid_argument("grid positions must lie in [0, 1)");
  }
}

Interval GridIntervalOrbit::at(std::int64_t k) const {
  const Endpoint l = lo_infinite() ? Endpoint::neg_inf() : grid_or_infinite(lo).shifted(k);
  const Endpoint h = hi_infinite() ? Endpoint::pos_inf() : grid_or_infinite(hi).shifted(k);
  return Interval(l, lo_b, h, hi_b);
}

GridIntervalOrbit GridIntervalOrbit::normalized(int n) const {
  GridIntervalOrbit out = *this;
  if (out.lo_infinite()) out.lo_b = Boundary::Open;
  if (out.hi_infinite()) out.hi_b = Boundary::Open;
  std::int64_t shift = 0;
  if (!lo_infinite()) {
    shift = floor_div(lo, n) * n;
  } else if (!hi_infinite()) {
    shift = floor_div(hi, n) * n;
  }
  if (!out.lo_infinite()) out.lo -= shift;
  if (!out.hi_infinite()) out.hi -= shift;
  return out;
}

std::vector<Interval> FamilySpec::members_at(const Endpoint& x) const {
  if (dir == Direction::Right) {
    return {Interval(x, Boundary::Closed, far, far_b), Interval(x, Boundary::Open, far, far_b)};
  }
  return {Interval(far, far_b, x, Boundary::Open), Interval(far, far_b, x, Boundary::Closed)};
}

bool operator==(const FamilySpec& a, const FamilySpec& b) { return compare_families(a, b) == 0; }
bool operator<(const FamilySpec& a, const FamilySpec& b) { return compare_families(a, b) < 0; }

AlphaRep AlphaRep::canonical() const {
  AlphaRep out{grid, {}, families};
  for (const auto& o : orbits) out.orbits.push_back(o.normalized(grid.n));
  std::sort(out.orbits.begin(), out.orbits.end());
  out.orbits.erase(std::unique(out.orbits.begin(), out.orbits.end()), out.orbits.end());
  std::sort(out.families.begin(), out.families.end());
  return out;
}

bool operator==(const AlphaRep& a, const AlphaRep& b) {
  return a.n() == b.n() && a.orbits == b.orbits && a.families == b.families;
}

bool operator<(const AlphaRep& a, const AlphaRep& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.orbits != b.orbits) return a.orbits < b.orbits;
  return std::lexicographical_compare(a.families.begin(), a.families.end(), b.families.begin(),
                                      b.families.end());
}

namespace {

// The eight endpoint sets at one sample point c of gap s, in the order
// r1 r2 r3 r4 l1 l2 l3 l4.  Right sets collect d >= a_{s+1} with
// [c,d] [c,d) (c,d] (c,d); left sets collect d <= a_s with [d,c] [d,c)
// (d,c] (d,c).
using PhiSets = std::array<std::vector<Endpoint>, 8>;

const std::array<const char*, 8> kPhiNames = {"phi^r_1", "phi^r_2", "phi^r_3", "phi^r_4",
                                              "phi^l_1", "phi^l_2", "phi^l_3", "phi^l_4"};

PhiSets phi_sets(const AlphaRep& r, std::int64_t s, const Endpoint& c) {
  PhiSets sets;
  for (const auto& f : r.families) {
    if (f.gap != s) continue;
    for (const auto& iv : f.members_at(c)) {
      if (iv.lo() == c && !(iv.hi() < Endpoint::grid(s + 1))) {
        const int slot = (iv.lo_closed() ? 0 : 2) + (iv.hi_closed() ? 0 : 1);
        sets[slot].push_back(iv.hi());
      } else if (iv.hi() == c && !(Endpoint::grid(s) < iv.lo())) {
        const int slot = 4 + (iv.lo_closed() ? 0 : 2) + (iv.hi_closed() ? 0 : 1);
        sets[slot].push_back(iv.lo());
      }
    }
  }
  for (auto& v : sets) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return sets;
}

AlphaValidation violation(std::string what, std::optional<std::int64_t> gap = std::nullopt) {
  return {false, std::move(what), gap};
}

}  // namespace

AlphaValidation validate_type_alpha(const AlphaRep& r) {
  try {
    r.grid.validate();
  } catch (const std::invalid_argument& e) {
    return violation(std::string("malformed grid: ") + e.what());
  }
  const int n = r.n();
  for (const auto& o : r.orbits) {
    try {
      (void)o.at(0);
    } catch (const std::invalid_argument& e) {
      return violation(std::string("malformed orbit: ") + e.what());
    }
  }
  for (const auto& f : r.families) {
    if (f.gap < 0 || f.gap >= n) return violation("family gap out of range", f.gap);
    const bool right_side = f.dir == Direction::Right && !(f.far < Endpoint::grid(f.gap + 1));
    const bool left_side = f.dir == Direction::Left && !(Endpoint::grid(f.gap) < f.far);
    if (!right_side && !left_side) {
      return violation("malformed family: far end on the wrong side of its gap", f.gap);
    }
    if (f.far.is_infinite() && f.far_b == Boundary::Closed) {
      return violation("malformed family: closed infinite end", f.gap);
    }
  }

  const auto& offsets = default_sample_offsets();
  for (std::int64_t s = 0; s < n; ++s) {
    std::vector<PhiSets> per_point;
    for (const auto& t : offsets) {
      const auto sets = phi_sets(r, s, Endpoint::gap(s, t));
      for (std::size_t k = 0; k < sets.size(); ++k) {
        for (const auto& d : sets[k]) {
          if (!is_grid_or_infinite(d)) {
            return violation(std::string(kPhiNames[k]) + " not contained in {a_i}", s);
          }
        }
      }
      // Twin members share their far end, so each pair agrees on the
      // boundary at d: [c,d]/(c,d], [c,d)/(c,d), [d,c]/[d,c), (d,c]/(d,c).
      constexpr std::array<std::pair<int, int>, 4> twins = {{{0, 2}, {1, 3}, {4, 5}, {6, 7}}};
      for (auto [a, b] : twins) {
        if (sets[a] != sets[b]) {
          return violation(std::string(kPhiNames[a]) + " != " + kPhiNames[b], s);
        }
      }
      const std::size_t total = sets[0].size() + sets[1].size() + sets[4].size() + sets[6].size();
      if (total != 1) {
        return violation("|phi| = " + std::to_string(total) + " != 1", s);
      }
      per_point.push_back(sets);
    }
    for (std::size_t i = 1; i < per_point.size(); ++i) {
      if (per_point[i] != per_point[0]) return violation("phi sets vary across the gap", s);
    }
  }
  return {};
}

bool alpha_is_rigid(const AlphaRep& r, const std::vector<Rational>& sample_offsets) {
  const int n = r.n();
  std::vector<Interval> base;
  std::int64_t lo_index = 0;
  std::int64_t hi_index = 0;
  bool have_index = false;
  auto note = [&](std::int64_t i) {
    lo_index = have_index ? std::min(lo_index, i) : i;
    hi_index = have_index ? std::max(hi_index, i) : i;
    have_index = true;
  };
  for (const auto& o : r.orbits) {
    base.push_back(o.at(0));
    if (!o.lo_infinite()) note(o.lo);
    if (!o.hi_infinite()) note(o.hi);
  }
  for (const auto& f : r.families) {
    note(f.gap);
    note(f.gap + 1);
    if (!f.far.is_infinite()) note(f.far.index());
    for (const auto& t : sample_offsets) {
      for (const auto& iv : f.members_at(Endpoint::gap(f.gap, t))) base.push_back(iv);
    }
  }
  const std::int64_t horizon = (hi_index - lo_index) + 2;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      for (std::int64_t k = -horizon; k <= horizon; ++k) {
        if (!is_compatible(base[i], base[j].shifted(k * n))) return false;
      }
    }
  }
  return true;
}

DiscreteInterval lattice_image(const GridIntervalOrbit& o) {
  const std::int64_t lo = o.lo_infinite() ? DiscreteInterval::kNegInf
                                          : 2 * o.lo + (o.lo_b == Boundary::Open ? 1 : 0);
  const std::int64_t hi = o.hi_infinite() ? DiscreteInterval::kPosInf
                                          : 2 * o.hi - (o.hi_b == Boundary::Open ? 1 : 0);
  return DiscreteInterval(lo, hi);
}

GridIntervalOrbit grid_preimage(const DiscreteInterval& iv) {
  GridIntervalOrbit o;
  if (iv.lo_infinite()) {
    o.lo = GridIntervalOrbit::kNegInf;
    o.lo_b = Boundary::Open;
  } else {
    const bool odd = floor_div(iv.lo, 2) * 2 != iv.lo;
    o.lo = floor_div(iv.lo, 2);
    o.lo_b = odd ? Boundary::Open : Boundary::Closed;
  }
  if (iv.hi_infinite()) {
    o.hi = GridIntervalOrbit::kPosInf;
    o.hi_b = Boundary::Open;
  } else {
    const bool odd = floor_div(iv.hi, 2) * 2 != iv.hi;
    o.hi = odd ? floor_div(iv.hi, 2) + 1 : iv.hi / 2;
    o.hi_b = odd ? Boundary::Open : Boundary::Closed;
  }
  return o;
}

OrbitSet tau(const AlphaRep& r) {
  const int m = 2 * r.n();
  std::vector<OrbitInterval> out;
  for (const auto& o : r.orbits) out.push_back(OrbitInterval::of(m, lattice_image(o)));
  return OrbitSet(m, std::move(out));
}

namespace {

std::vector<FamilySpec> family_candidates(int n, std::int64_t s, Direction dir) {
  std::vector<FamilySpec> out;
  if (dir == Direction::Right) {
    for (std::int64_t f = s + 1; f <= s + 2 * n; ++f) {
      for (auto b : {Boundary::Open, Boundary::Closed}) out.push_back({s, dir, Endpoint::grid(f), b});
    }
    out.push_back({s, dir, Endpoint::pos_inf(), Boundary::Open});
  } else {
    for (std::int64_t f = s - 2 * n + 1; f <= s; ++f) {
      for (auto b : {Boundary::Open, Boundary::Closed}) out.push_back({s, dir, Endpoint::grid(f), b});
    }
    out.push_back({s, dir, Endpoint::neg_inf(), Boundary::Open});
  }
  return out;
}

std::string direction_name(Direction d) { return d == Direction::Left ? "left" : "right"; }

}  // namespace

std::vector<AlphaRep> expand_fibers(const OrbitSet& lattice, const AlphaGrid& grid) {
  grid.validate();
  const int n = grid.n;
  if (lattice.period() != 2 * n) throw std::invalid_argument("lattice period must be 2n");
  if (n > 30) throw std::invalid_argument("n too large for fiber expansion");

  AlphaRep skeleton{grid, {}, {}};
  for (const auto& o : lattice.orbits()) {
    skeleton.orbits.push_back(grid_preimage(o.representative()).normalized(n));
  }

  // For each gap and direction exactly one far end keeps everything rigid.
  std::vector<std::array<FamilySpec, 2>> chosen(n);
  for (std::int64_t s = 0; s < n; ++s) {
    for (auto dir : {Direction::Left, Direction::Right}) {
      std::vector<FamilySpec> survivors;
      for (const auto& cand : family_candidates(n, s, dir)) {
        AlphaRep trial = skeleton;
        trial.families = {cand};
        if (alpha_is_rigid(trial)) survivors.push_back(cand);
      }
      if (survivors.size() != 1) {
        throw FiberAnomaly("fiber anomaly: gap " + std::to_string(s) + " direction " +
                           direction_name(dir) + " admits " + std::to_string(survivors.size()) +
                           " families over " + lattice.str());
      }
      chosen[s][dir == Direction::Left ? 0 : 1] = survivors.front();
    }
  }

  std::vector<AlphaRep> out;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    AlphaRep rep = skeleton;
    for (int s = 0; s < n; ++s) rep.families.push_back(chosen[s][(mask >> s) & 1ULL]);
    rep = rep.canonical();
    const auto check = validate_type_alpha(rep);
    if (!check.ok) throw FiberAnomaly("fiber anomaly: not of type alpha: " + check.violation);
    if (!alpha_is_rigid(rep)) throw FiberAnomaly("fiber anomaly: combined families not rigid");
    if (!(tau(rep) == lattice)) throw FiberAnomaly("fiber anomaly: image differs from base");
    out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AlphaRep> enumerate_alpha(int n, int jobs) {
  const auto grid = AlphaGrid::uniform(n);
  const auto bases = enumerate_maximal_rigid(2 * n, jobs);
  std::vector<std::vector<AlphaRep>> fibers(bases.size());
  detail::parallel_for(bases.size(), jobs,
                       [&](std::size_t i) { fibers[i] = expand_fibers(bases[i], grid); });
  std::vector<AlphaRep> out;
  for (auto& f : fibers) {
    for (auto& r : f) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw FiberAnomaly("fiber anomaly: fibers over distinct bases overlap");
  }
  return out;
}

BigInt count_alpha(int n, CountMode mode, int jobs) {
  if (mode == CountMode::Formula) return alpha_count_formula(n);
  return BigInt(enumerate_alpha(n, jobs).size());
}

}  // namespace cquiver
