#include "cquiver/equivariant.hpp"

#include <algorithm>
#include <bitset>
#include <stdexcept>

#include "parallel.hpp"

namespace cquiver {

namespace {

std::int64_t normalize(std::int64_t x, int m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

void require_period(int m) {
  if (m < 1) throw std::invalid_argument("period must be positive");
}

}  // namespace

OrbitInterval::OrbitInterval(int m, OrbitKind kind, std::int64_t anchor, std::int64_t len)
    : m_(m), kind_(kind), anchor_(anchor), len_(len) {}

OrbitInterval OrbitInterval::finite(int m, std::int64_t a, std::int64_t len) {
  require_period(m);
  if (len < 1) throw std::invalid_argument("finite orbit needs len >= 1");
  return OrbitInterval(m, OrbitKind::Finite, normalize(a, m), len);
}

OrbitInterval OrbitInterval::left_ray(int m, std::int64_t d) {
  require_period(m);
  return OrbitInterval(m, OrbitKind::LeftRay, normalize(d, m), 0);
}

OrbitInterval OrbitInterval::right_ray(int m, std::int64_t c) {
  require_period(m);
  return OrbitInterval(m, OrbitKind::RightRay, normalize(c, m), 0);
}

OrbitInterval OrbitInterval::of(int m, const DiscreteInterval& iv) {
  if (iv.lo_infinite() && iv.hi_infinite()) {
    throw std::invalid_argument("the whole line has no orbit representative");
  }
  if (iv.lo_infinite()) return left_ray(m, iv.hi);
  if (iv.hi_infinite()) return right_ray(m, iv.lo);
  return finite(m, iv.lo, iv.hi - iv.lo + 1);
}

DiscreteInterval OrbitInterval::representative() const {
  switch (kind_) {
    case OrbitKind::LeftRay:
      return DiscreteInterval::left_ray(anchor_);
    case OrbitKind::RightRay:
      return DiscreteInterval::right_ray(anchor_);
    case OrbitKind::Finite:
      break;
  }
  return {anchor_, anchor_ + len_ - 1};
}

std::strong_ordering operator<=>(const OrbitInterval& a, const OrbitInterval& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (auto c = a.anchor_ <=> b.anchor_; c != 0) return c;
  return a.len_ <=> b.len_;
}

std::string OrbitInterval::str() const { return representative().str(); }

OrbitSet::OrbitSet(int m, std::vector<OrbitInterval> orbits) : m_(m), orbits_(std::move(orbits)) {
  require_period(m);
  for (const auto& o : orbits_) {
    if (o.period() != m) throw std::invalid_argument("period mismatch");
  }
  std::sort(orbits_.begin(), orbits_.end());
  orbits_.erase(std::unique(orbits_.begin(), orbits_.end()), orbits_.end());
}

bool OrbitSet::has_left_ray() const {
  return std::any_of(orbits_.begin(), orbits_.end(),
                     [](const auto& o) { return o.kind() == OrbitKind::LeftRay; });
}

bool OrbitSet::has_right_ray() const {
  return std::any_of(orbits_.begin(), orbits_.end(),
                     [](const auto& o) { return o.kind() == OrbitKind::RightRay; });
}

std::strong_ordering operator<=>(const OrbitSet& a, const OrbitSet& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.orbits_.begin(), a.orbits_.end(),
                                                b.orbits_.begin(), b.orbits_.end());
}

std::string OrbitSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    if (i) s += ", ";
    s += orbits_[i].str();
  }
  return s + "}";
}

bool orbit_obstructed(const OrbitInterval& a, const OrbitInterval& b) {
  if (a.period() != b.period()) throw std::invalid_argument("period mismatch");
  const int m = a.period();
  // Beyond this many periods the translates are separated by a gap or nested
  // inside a ray, and the case table gives 0.
  const std::int64_t reach = (a.length() + b.length() + 2 * m) / m;
  const auto ra = a.representative();
  const auto rb = b.representative();
  for (std::int64_t k = -reach; k <= reach; ++k) {
    const auto shifted = rb.shifted(k * m);
    if (interval_ext(ra, shifted) != 0 || interval_ext(shifted, ra) != 0) return true;
  }
  return false;
}

bool self_rigid(const OrbitInterval& o) {
  const int m = o.period();
  const std::int64_t reach = (2 * o.length() + 2 * m) / m;
  const auto r = o.representative();
  for (std::int64_t k = -reach; k <= reach; ++k) {
    if (k == 0) continue;
    const auto shifted = r.shifted(k * m);
    if (interval_ext(r, shifted) != 0 || interval_ext(shifted, r) != 0) return false;
  }
  return true;
}

std::vector<OrbitInterval> candidate_pool(int m) {
  require_period(m);
  // Orbits of length >= m always meet their own translate; check that on a
  // range of lengths before dropping them from the pool.
  for (std::int64_t len = m; len <= 3 * static_cast<std::int64_t>(m) + 1; ++len) {
    for (std::int64_t a = 0; a < m; ++a) {
      if (self_rigid(OrbitInterval::finite(m, a, len))) {
        throw std::logic_error("self-rigidity law violated: orbit of [" + std::to_string(a) +
                               "," + std::to_string(a + len - 1) + "] is self-rigid");
      }
    }
  }
  std::vector<OrbitInterval> pool;
  for (std::int64_t d = 0; d < m; ++d) pool.push_back(OrbitInterval::left_ray(m, d));
  for (std::int64_t c = 0; c < m; ++c) pool.push_back(OrbitInterval::right_ray(m, c));
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t len = 1; len < m; ++len) pool.push_back(OrbitInterval::finite(m, a, len));
  }
  std::erase_if(pool, [](const auto& o) { return !self_rigid(o); });
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {

constexpr std::size_t kMaxPool = 256;
using Mask = std::bitset<kMaxPool>;

struct Branch {
  std::vector<int> chosen;
  Mask candidates;
  Mask excluded;
};

// Bron-Kerbosch with pivoting over the compatibility graph.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Mask>& adjacency) : adj_(adjacency) {}

  void run(Branch b, std::vector<std::vector<int>>& out) const {
    if (b.candidates.none()) {
      if (b.excluded.none()) out.push_back(b.chosen);
      return;
    }
    const int pivot = choose_pivot(b.candidates | b.excluded, b.candidates);
    Mask todo = b.candidates & ~adj_[pivot];
    for (std::size_t v = todo._Find_first(); v < kMaxPool; v = todo._Find_next(v)) {
      Branch next{b.chosen, b.candidates & adj_[v], b.excluded & adj_[v]};
      next.chosen.push_back(static_cast<int>(v));
      run(std::move(next), out);
      b.candidates.reset(v);
      b.excluded.set(v);
    }
  }

  std::vector<Branch> top_level(std::size_t n) const {
    Mask all;
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    Branch root{{}, all, {}};
    std::vector<Branch> out;
    if (n == 0) {
      out.push_back(root);
      return out;
    }
    const int pivot = choose_pivot(all, all);
    Mask todo = all & ~adj_[pivot];
    for (std::size_t v = todo._Find_first(); v < kMaxPool; v = todo._Find_next(v)) {
      Branch next{{static_cast<int>(v)}, root.candidates & adj_[v], root.excluded & adj_[v]};
      out.push_back(std::move(next));
      root.candidates.reset(v);
      root.excluded.set(v);
    }
    return out;
  }

 private:
  int choose_pivot(const Mask& from, const Mask& candidates) const {
    int best = -1;
    std::size_t best_count = 0;
    for (std::size_t u = from._Find_first(); u < kMaxPool; u = from._Find_next(u)) {
      const std::size_t c = (candidates & adj_[u]).count();
      if (best < 0 || c > best_count) {
        best = static_cast<int>(u);
        best_count = c;
      }
    }
    return best;
  }

  const std::vector<Mask>& adj_;
};

}  // namespace

std::vector<OrbitSet> enumerate_maximal_rigid(int m, int jobs) {
  const auto pool = candidate_pool(m);
  if (pool.size() > kMaxPool) throw std::invalid_argument("period too large for enumeration");

  std::vector<Mask> adjacency(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (!orbit_obstructed(pool[i], pool[j])) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  // Left and right rays never coexist; the graph already encodes this, but
  // the search relies on it, so confirm it for this period.
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (pool[i].kind() == OrbitKind::LeftRay && pool[j].kind() == OrbitKind::RightRay &&
          adjacency[i].test(j)) {
        throw std::logic_error("mixed rays " + pool[i].str() + " and " + pool[j].str() +
                               " are compatible");
      }
    }
  }

  const CliqueSearch search(adjacency);
  const auto branches = search.top_level(pool.size());
  std::vector<std::vector<std::vector<int>>> found(branches.size());
  detail::parallel_for(branches.size(), jobs,
                       [&](std::size_t b) { search.run(branches[b], found[b]); });

  std::vector<OrbitSet> out;
  for (const auto& per_branch : found) {
    for (const auto& clique : per_branch) {
      std::vector<OrbitInterval> orbits;
      for (int v : clique) orbits.push_back(pool[v]);
      out.emplace_back(m, std::move(orbits));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OrbitInterval star(const OrbitInterval& o) {
  const int m = o.period();
  switch (o.kind()) {
    case OrbitKind::LeftRay:
      return OrbitInterval::right_ray(m, -o.anchor());
    case OrbitKind::RightRay:
      return OrbitInterval::left_ray(m, -o.anchor());
    case OrbitKind::Finite:
      break;
  }
  return OrbitInterval::finite(m, -o.anchor() - o.length() + 1, o.length());
}

OrbitSet star(const OrbitSet& s) {
  std::vector<OrbitInterval> out;
  for (const auto& o : s.orbits()) out.push_back(star(o));
  return OrbitSet(s.period(), std::move(out));
}

RepSpec fold_to_cyclic(const OrbitInterval& o, int prime) {
  if (o.is_ray()) throw std::invalid_argument("infinite-dimensional fold");
  const int m = o.period();
  const auto q = QuiverSpec::cyclic(m);
  const auto rep = o.representative();
  // Lattice point p becomes a basis vector at vertex p mod m, numbered in
  // increasing order of p.
  std::vector<int> dims(m, 0);
  std::vector<int> slot(static_cast<std::size_t>(o.length()));
  for (std::int64_t p = rep.lo; p <= rep.hi; ++p) {
    slot[p - rep.lo] = dims[normalize(p, m)]++;
  }
  RepSpec out = RepSpec::zero(q, dims, prime);
  for (std::int64_t p = rep.lo + 1; p <= rep.hi; ++p) {
    // The lattice arrow p-1 -> p folds onto the arrow with head p mod m,
    // which is arrow index (p mod m) - 1, or m - 1 for head 0.
    const std::int64_t head = normalize(p, m);
    const std::size_t arrow = head == 0 ? m - 1 : head - 1;
    out.mats[arrow].set(slot[p - rep.lo], slot[p - 1 - rep.lo], 1);
  }
  return out;
}

RepSpec fold_to_cyclic(const OrbitSet& s, int prime) {
  RepSpec out = RepSpec::zero(QuiverSpec::cyclic(s.period()), std::vector<int>(s.period(), 0), prime);
  for (const auto& o : s.orbits()) out = direct_sum(out, fold_to_cyclic(o, prime));
  return out;
}

}  // namespace cquiver
