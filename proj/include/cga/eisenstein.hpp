#ifndef CGA_EISENSTEIN_HPP
#define CGA_EISENSTEIN_HPP

#include "cga/rational.hpp"

namespace cga {

/* Element a + b*w of Q(w) with w^2 = -1 - w (w a primitive third root of
 * unity). Used only to specialize expansion parameters at roots of unity;
 * results exposed publicly must have b == 0. */
struct Eis {
    Rat a;
    Rat b;

    Eis() = default;
    Eis(long n) : a(n) {}
    Eis(const Rat& a_) : a(a_) {}
    Eis(const Rat& a_, const Rat& b_) : a(a_), b(b_) {}

    static Eis omega() { return Eis(Rat(0), Rat(1)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    // Requires b == 0.
    const Rat& rational_part() const {
        if (!b.is_zero())
            throw std::domain_error("Eis: imaginary part did not cancel");
        return a;
    }

    // w -> w^2 = -1 - w
    Eis conj() const { return Eis(a - b, -b); }

    // self * conj(self) = a^2 - a b + b^2, a plain rational >= 0
    Rat norm() const { return a * a - a * b + b * b; }

    Eis operator-() const { return Eis(-a, -b); }
    Eis& operator+=(const Eis& o) { a += o.a; b += o.b; return *this; }
    Eis& operator-=(const Eis& o) { a -= o.a; b -= o.b; return *this; }
    Eis& operator*=(const Eis& o) {
        // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w
        Rat ac = a * o.a, bd = b * o.b, ad_bc = a * o.b + b * o.a;
        a = ac - bd;
        b = ad_bc - bd;
        return *this;
    }
    Eis& operator/=(const Eis& o) {
        Rat n = o.norm();
        if (n.is_zero())
            throw std::domain_error("Eis: division by zero");
        Eis c = o.conj();
        *this *= c;
        a /= n;
        b /= n;
        return *this;
    }

    friend Eis operator+(Eis x, const Eis& y) { return x += y; }
    friend Eis operator-(Eis x, const Eis& y) { return x -= y; }
    friend Eis operator*(Eis x, const Eis& y) { return x *= y; }
    friend Eis operator/(Eis x, const Eis& y) { return x /= y; }
    friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }

    Eis pow(long e) const {
        if (e < 0) {
            Eis inv = Eis(Rat(1)) / *this;
            return inv.pow(-e);
        }
        Eis r(Rat(1)), base(*this);
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1)
                r *= base;
            base *= base;
        }
        return r;
    }

    std::string str() const {
        if (b.is_zero())
            return a.str();
        return a.str() + " + (" + b.str() + ")*w";
    }
};

} // namespace cga

#endif
