#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cquiver {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// Number of maximal rigid orbit sets for period m: 2 C(2m-1, m-1).
BigInt equivariant_count_formula(int m);

/// Number of maximal rigid type-alpha representations: 2^(n+1) C(4n-1, 2n-1).
BigInt alpha_count_formula(int n);

}  // namespace cquiver
