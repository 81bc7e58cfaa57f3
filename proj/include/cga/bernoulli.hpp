#ifndef CGA_BERNOULLI_HPP
#define CGA_BERNOULLI_HPP

#include "cga/rational.hpp"

#include <vector>

namespace cga {

// First Bernoulli numbers, B_1 = -1/2. Computed per call from the
// recurrence sum_{k<=n} C(n+1,k) B_k = 0; no shared memo table, so calls
// are safe from any thread.
std::vector<Rat> bernoulli_numbers(int n_max);
Rat bernoulli_number(int n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}
Rat bernoulli_poly(int n, const Rat& x);

} // namespace cga

#endif
