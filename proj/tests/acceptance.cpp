// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cquiver/alpha.hpp"
#include "cquiver/binomial.hpp"
#include "cquiver/equivariant.hpp"
#include "cquiver/ext.hpp"
#include "cquiver/io.hpp"
#include "test_support.hpp"

using namespace cquiver;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

std::string data(const std::string& name) { return std::string(CQUIVER_TEST_DATA_DIR) + "/" + name; }

// Pascal's triangle, independent of the library's binomial.
long long pascal(int n, int k) {
  std::vector<std::vector<long long>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return (k < 0 || k > n) ? 0 : t[n][k];
}

Verdict equivariant_counts() {
  const std::vector<long long> expected = {2, 6, 20, 70, 252, 924};
  std::ostringstream d;
  bool ok = true;
  for (int m = 1; m <= 6; ++m) {
    const auto got = enumerate_maximal_rigid(m).size();
    ok &= static_cast<long long>(got) == expected[m - 1] &&
          equivariant_count_formula(m) == expected[m - 1] &&
          2 * pascal(2 * m - 1, m - 1) == expected[m - 1];
    d << (m > 1 ? "," : "") << got;
  }
  return {ok, d.str()};
}

Verdict alpha_counts() {
  const std::vector<long long> expected = {12, 280, 7392};
  std::ostringstream d;
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const BigInt enumerated = count_alpha(n, CountMode::Enumerate);
    const BigInt formula = count_alpha(n, CountMode::Formula);
    ok &= enumerated == formula && enumerated == expected[n - 1] &&
          (2LL << n) * pascal(4 * n - 1, 2 * n - 1) == expected[n - 1];
    d << (n > 1 ? "," : "") << enumerated;
  }
  return {ok, d.str()};
}

Verdict one_point_regression() {
  const auto doc = read_json_file(data("n1_maximal_rigid.json"));
  std::vector<AlphaRep> fixture;
  for (const auto& r : doc.at("representations")) {
    fixture.push_back(alpha_rep_from_json(r).canonical());
  }
  std::sort(fixture.begin(), fixture.end());
  const auto got = enumerate_alpha(1);
  return {fixture.size() == 12 && got == fixture,
          std::to_string(got.size()) + " enumerated, " + std::to_string(fixture.size()) +
              " in fixture"};
}

Verdict reduction_regression() {
  const auto doc = read_json_file(data("period2_maximal_rigid.json"));
  std::vector<OrbitSet> expected;
  for (const auto& s : doc.at("sets")) {
    expected.push_back(orbit_set_from_json(s));
  }
  std::sort(expected.begin(), expected.end());
  std::map<OrbitSet, int> fibers;
  for (const auto& r : enumerate_alpha(1)) ++fibers[tau(r)];
  bool ok = fibers.size() == 6 && expected.size() == 6 &&
            expected == enumerate_maximal_rigid(2);
  for (const auto& s : expected) ok &= fibers.count(s) && fibers[s] == 2;
  return {ok, std::to_string(fibers.size()) + " images"};
}

Verdict oracle_equivalence() {
  std::vector<DiscreteInterval> all;
  for (int lo = -8; lo <= 8; ++lo) {
    for (int hi = lo; hi <= 8; ++hi) all.emplace_back(lo, hi);
  }
  const auto w = QuiverSpec::linear(-10, 10);
  std::vector<RepSpec> reps;
  for (const auto& iv : all) reps.push_back(interval_to_rep(w, iv));
  long pairs = 0;
  long mismatches = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      ++pairs;
      if (hom_ext_dims(reps[i], reps[j]).ext != interval_ext(all[i], all[j])) ++mismatches;
    }
  }
  return {mismatches == 0 && pairs == 153 * 153,
          std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches"};
}

Verdict euler_identity() {
  std::mt19937_64 rng(20241016);
  long checked = 0;
  long violations = 0;
  const std::vector<QuiverSpec> quivers = {QuiverSpec::linear(0, 3), QuiverSpec::linear(-2, 2),
                                           QuiverSpec::cyclic(1), QuiverSpec::cyclic(2),
                                           QuiverSpec::cyclic(3), QuiverSpec::cyclic(4)};
  for (const auto& q : quivers) {
    for (int p : {2, 3}) {
      for (int t = 0; t < 100; ++t) {
        const auto a = cquiver::testing::random_rep(q, p, 3, rng);
        const auto b = cquiver::testing::random_rep(q, p, 3, rng);
        const auto he = hom_ext_dims(a, b);
        ++checked;
        if (he.hom - he.ext != euler_form(q, a.dims, b.dims)) ++violations;
      }
    }
  }
  long field_mismatches = 0;
  const auto w = QuiverSpec::linear(-5, 5);
  for (int lo = -5; lo <= 5; ++lo) {
    for (int hi = lo; hi <= 5; ++hi) {
      for (int lo2 = -5; lo2 <= 5; ++lo2) {
        for (int hi2 = lo2; hi2 <= 5; ++hi2) {
          const auto a = interval_to_rep(w, {lo, hi});
          const auto b = interval_to_rep(w, {lo2, hi2});
          if (!(hom_ext_dims(a, b) == hom_ext_dims(a.with_prime(3), b.with_prime(3)))) {
            ++field_mismatches;
          }
        }
      }
    }
  }
  return {checked >= 1000 && violations == 0 && field_mismatches == 0,
          std::to_string(checked) + " pairs, " + std::to_string(violations) + " violations, " +
              std::to_string(field_mismatches) + " field mismatches"};
}

Verdict duality_and_purity() {
  bool ok = true;
  for (int m = 1; m <= 5; ++m) {
    const auto sets = enumerate_maximal_rigid(m);
    std::vector<OrbitSet> left;
    std::vector<OrbitSet> right;
    for (const auto& s : sets) {
      ok &= star(star(s)) == s;
      ok &= std::binary_search(sets.begin(), sets.end(), star(s));
      ok &= s.has_left_ray() != s.has_right_ray();
      (s.has_left_ray() ? left : right).push_back(s);
    }
    std::vector<OrbitSet> mapped;
    for (const auto& s : left) mapped.push_back(star(s));
    std::sort(mapped.begin(), mapped.end());
    ok &= mapped == right;
    const auto expected = static_cast<std::size_t>(pascal(2 * m - 1, m - 1));
    ok &= left.size() == expected && right.size() == expected;
  }
  return {ok, "m=1..5"};
}

Verdict fold_consistency() {
  long pairs = 0;
  long mismatches = 0;
  for (int m = 2; m <= 5; ++m) {
    std::vector<OrbitInterval> finite;
    for (int a = 0; a < m; ++a) {
      for (int len = 1; len <= 2 * m; ++len) finite.push_back(OrbitInterval::finite(m, a, len));
    }
    std::vector<RepSpec> folds;
    for (const auto& o : finite) folds.push_back(fold_to_cyclic(o));
    for (std::size_t i = 0; i < finite.size(); ++i) {
      for (std::size_t j = 0; j < finite.size(); ++j) {
        ++pairs;
        const bool ext =
            hom_ext_dims(folds[i], folds[j]).ext + hom_ext_dims(folds[j], folds[i]).ext > 0;
        if (ext != orbit_obstructed(finite[i], finite[j])) ++mismatches;
      }
    }
  }
  return {mismatches == 0,
          std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"equivariant counts m=1..6", equivariant_counts},
      {"type-alpha counts n=1..3", alpha_counts},
      {"n=1 enumeration matches the twelve-rep fixture", one_point_regression},
      {"reduction onto period-2 sets with fibers of size 2", reduction_regression},
      {"closed-form Ext agrees with matrix Ext on [-8,8]", oracle_equivalence},
      {"Euler identity and field cross-check", euler_identity},
      {"star duality and chirality purity", duality_and_purity},
      {"fold consistency m=2..5", fold_consistency},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    std::printf("[%s] %zu. %s (%s; %.2fs)\n", v.ok ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), v.detail.c_str(), secs.count());
    if (!v.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
