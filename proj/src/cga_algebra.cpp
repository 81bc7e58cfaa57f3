#include "cga/cga_algebra.hpp"

#include <stdexcept>

namespace cga {

CgaElement CgaElement::P(int ell, int n) {
    if (n < 0 || n > 2 * ell)
        throw std::out_of_range("CgaElement: P index outside 0..2*ell");
    return {Tag::P, n, ell};
}

std::string CgaElement::name() const {
    switch (tag) {
    case Tag::D: return "D";
    case Tag::H: return "H";
    case Tag::C: return "C";
    case Tag::P: return "P" + std::to_string(n);
    }
    return {};
}

namespace {

CgaCombo combo(const Rat& c, const CgaElement& e) {
    if (c.is_zero())
        return {};
    return {{c, e}};
}

// Brackets with the first argument in {D, H, C}, second arbitrary.
CgaCombo bracket_ordered(const CgaElement& a, const CgaElement& b) {
    using Tag = CgaElement::Tag;
    const int ell = a.ell;
    switch (a.tag) {
    case Tag::D:
        switch (b.tag) {
        case Tag::H: return combo(Rat(2), b);                            // [D,H] = 2H
        case Tag::C: return combo(Rat(-2), b);                           // [D,C] = -2C
        case Tag::P: return combo(Rat(2 * (ell - b.n)), b);              // [D,P_n] = 2(l-n)P_n
        default: return {};
        }
    case Tag::H:
        switch (b.tag) {
        case Tag::C: return combo(Rat(-1), CgaElement::D(ell));          // [C,H] = D
        case Tag::P: // [H,P_n] = -n P_{n-1}
            if (b.n == 0)
                return {};
            return combo(Rat(-b.n), CgaElement::P(ell, b.n - 1));
        default: return {};
        }
    case Tag::C:
        if (b.tag == Tag::P) { // [C,P_n] = (2l-n) P_{n+1}
            if (b.n == 2 * ell)
                return {};
            return combo(Rat(2 * ell - b.n), CgaElement::P(ell, b.n + 1));
        }
        return {};
    default:
        return {};
    }
}

} // namespace

namespace {

int tag_rank(CgaElement::Tag t) {
    switch (t) {
    case CgaElement::Tag::D: return 0;
    case CgaElement::Tag::H: return 1;
    case CgaElement::Tag::C: return 2;
    case CgaElement::Tag::P: return 3;
    }
    return 3;
}

} // namespace

CgaCombo bracket(const CgaElement& a, const CgaElement& b) {
    if (a.ell != b.ell)
        throw std::invalid_argument("bracket: mismatched ell");
    int ra = tag_rank(a.tag), rb = tag_rank(b.tag);
    if (ra == rb)
        return {}; // same sl(2) generator, or the abelian ideal
    if (ra < rb)
        return bracket_ordered(a, b);
    CgaCombo r = bracket_ordered(b, a);
    for (auto& [c, e] : r)
        c = -c;
    return r;
}

std::vector<CgaElement> cga_basis(int ell) {
    if (ell < 1)
        throw std::invalid_argument("cga_basis: ell must be >= 1");
    std::vector<CgaElement> v{CgaElement::D(ell), CgaElement::H(ell), CgaElement::C(ell)};
    for (int n = 0; n <= 2 * ell; ++n)
        v.push_back(CgaElement::P(ell, n));
    return v;
}

Rat delta_rho(int ell) {
    return -(Rat(1) + Rat(ell) * Rat(ell + 1) / Rat(2));
}

} // namespace cga
