#ifndef CGA_REALIZATION_HPP
#define CGA_REALIZATION_HPP

#include "cga/cga_algebra.hpp"
#include "cga/diffop.hpp"

#include <string>
#include <vector>

namespace cga {

/* The embeddings of cga_ell(1,C) into the Weyl algebras of n_+ and n_+^*:
 * pi over the X family (t, x_0..x_{ell-1}), pi_hat = F o pi over the Y
 * family (u, y_0..y_{ell-1}), and the residual operators on the u-free
 * subalgebra in the z coordinates. */

DiffOp pi(int ell, const Rat& delta, const Rat& p, const CgaElement& a);
DiffOp pi_hat(int ell, const Rat& delta, const Rat& p, const CgaElement& a);

// Only P_ell, D, C act on the u-free subalgebra; everything else throws.
DiffOp pi_hat_res(int ell, const Rat& delta, const Rat& p, const CgaElement& a);

// Algebra isomorphism t -> -d_u, d_t -> u, x_i -> -d_{y_i}, d_{x_i} -> y_i.
DiffOp fourier(const DiffOp& op);

struct Sl2Triple {
    DiffOp t1;  // sum z_n d_{z_{n+1}} - c d_{z_0}
    DiffOp t0;  // sum (n+1) z_n d_{z_n} + c^2/2
    DiffOp tm1; // sum (n+1)(n+2) z_{n+1} d_{z_n} - c z_0
};

// Truncated so that every variable index stays within 0..ell-1.
Sl2Triple sl2_triple(const Rat& c, int ell);

// T_1^c alone, on F_ell.
DiffOp t1_op(const Rat& c, int ell);

/* The sl(2) commutation relations hold on all of F; at a finite truncation
 * the relation [T_1,T_-1] = 2 T_0 picks up a boundary term supported on the
 * last variable. Building the triple with one spare variable and restricting
 * to F_ell checks the relations exactly. */
bool sl2_relations_hold(const Rat& c, int ell);

enum class Rep { Pi, PiHat };

struct HomFailure {
    CgaElement a, b;
    DiffOp residual;
};

struct HomReport {
    std::vector<HomFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

// Asserts [rep(a), rep(b)] = rep([a,b]) for every ordered basis pair.
HomReport check_homomorphism(int ell, const Rat& delta, const Rat& p, Rep rep);

} // namespace cga

#endif
