#ifndef CGA_RATIONAL_HPP
#define CGA_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cga {

/* Exact rational scalar backed by GMP. Canonical form (gcd(num,den)=1,
 * den>0) is maintained on every construction path, so equality is plain
 * value comparison. */
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(int n) : v_(n) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0)
            throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "a" and "a/b".
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        if (q.get_den() == 0)
            throw std::domain_error("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero())
            throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inv() const {
        if (is_zero())
            throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    Rat pow(long e) const {
        if (e < 0)
            return inv().pow(-e);
        mpq_class r(1), base(v_);
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1)
                r *= base;
            base *= base;
        }
        return Rat(r);
    }

    // "n" when the denominator is 1, "n/d" otherwise.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rat factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(f);
}

// Zero outside 0 <= k <= n; the summation ranges of the operator formulas
// rely on this convention.
inline Rat binomial(long n, long k) {
    if (n < 0)
        throw std::domain_error("binomial: negative n");
    if (k < 0 || k > n)
        return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rat(b);
}

} // namespace cga

#endif
