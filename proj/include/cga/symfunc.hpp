#ifndef CGA_SYMFUNC_HPP
#define CGA_SYMFUNC_HPP

#include "cga/multipoly.hpp"
#include "cga/partition.hpp"
#include "cga/pexpr.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cga {

// The four classical families, expanded explicitly in x1..x_nvars
// (Gen family, base "x", start 1). e_k and h_k are 1 at k = 0, and
// e_k = 0 for k > nvars.
MultiPoly expand_e(int k, int nvars);
MultiPoly expand_p(int k, int nvars);
MultiPoly expand_h(int k, int nvars);
MultiPoly expand_m(const Partition& lam, int nvars);

// e_n = sum_{lambda of n} eps_lambda p_lambda / z_lambda
PExpr e_in_p(int n);

// u_n(y1..yn) with p_n(x) = u_n(e_1(x),...,e_n(x)); Gen family, base "y".
MultiPoly u_poly(int n);

// p_k(x_1..x_r) as a polynomial in p_1..p_r (identity for k <= r),
// via the Newton recurrence p_k = e_1 p_{k-1} - e_2 p_{k-2} + ...
PExpr reduce_p(int k, int r);

// reduce_p followed by setting p_1 = 0.
PExpr reduce_p_mod_p1(int k, int r);

// Change-of-basis coefficients a^r_{lambda,mu}:
// p_lambda(x_1..x_r) = sum_{mu in P_n(r)} a^r_{lambda,mu} p_mu(x_1..x_r).
// Identity block on P_n(r).
std::map<std::pair<Partition, Partition>, Rat> a_coeffs(int n, int r);

// Termwise comparison of the three expansions of prod (1 + x_i y_j),
// truncated to total degree <= max_deg.
bool cauchy_check(int nx, int ny, int max_deg);

// Monic polynomial whose root multiset solves p_i(alpha) = a_i, i = 1..r.
// Coefficients descending: {1, -e_1, +e_2, ..., (-1)^r e_r}.
std::vector<Rat> power_sum_system_poly(const std::vector<Rat>& a);

// Evaluate a Gen-family polynomial at a PExpr-valued point (variable i of
// the polynomial gets values[i]).
PExpr pexpr_substitute(const MultiPoly& poly, const std::vector<PExpr>& values);

} // namespace cga

#endif
