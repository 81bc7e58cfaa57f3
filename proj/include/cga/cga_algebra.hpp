#ifndef CGA_CGA_ALGEBRA_HPP
#define CGA_CGA_ALGEBRA_HPP

#include "cga/rational.hpp"

#include <string>
#include <vector>

namespace cga {

/* Basis element of cga_ell(1,C) = <D, H, C, P_0 ... P_{2 ell}>. */
struct CgaElement {
    enum class Tag { D, H, C, P };

    Tag tag;
    int n;   // only for P
    int ell;

    static CgaElement D(int ell) { return {Tag::D, 0, ell}; }
    static CgaElement H(int ell) { return {Tag::H, 0, ell}; }
    static CgaElement C(int ell) { return {Tag::C, 0, ell}; }
    static CgaElement P(int ell, int n);

    std::string name() const;

    friend bool operator==(const CgaElement& a, const CgaElement& b) {
        return a.tag == b.tag && a.n == b.n && a.ell == b.ell;
    }
};

using CgaCombo = std::vector<std::pair<Rat, CgaElement>>;

// Exact structure constants; empty vector means zero.
CgaCombo bracket(const CgaElement& a, const CgaElement& b);

// D, H, C, P_0 ... P_{2 ell}
std::vector<CgaElement> cga_basis(int ell);

Rat delta_rho(int ell); // -(1 + ell(ell+1)/2)

} // namespace cga

#endif
