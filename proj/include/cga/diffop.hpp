#ifndef CGA_DIFFOP_HPP
#define CGA_DIFFOP_HPP

#include "cga/multipoly.hpp"
#include "cga/rational.hpp"
#include "cga/varfamily.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cga {

/* Element of the Weyl algebra over a declared variable family: a finite sum
 * of (monomial) x (derivative multi-index) terms with rational coefficients,
 * kept in normal order (all multiplications left of all derivatives).
 * Composition re-normal-orders exactly via the commutation relations, so
 * operator equality is term-map equality. */
class DiffOp {
public:
    using Exps = std::vector<int>;
    using Key = std::pair<Exps, Exps>; // (mono, deriv), trailing zeros stripped

    explicit DiffOp(VarFamily fam) : fam_(std::move(fam)) {}

    static DiffOp zero(VarFamily fam) { return DiffOp(std::move(fam)); }
    static DiffOp constant(VarFamily fam, const Rat& c) {
        DiffOp d(std::move(fam));
        d.add_term({}, {}, c);
        return d;
    }
    // multiplication by variable i
    static DiffOp mul_var(VarFamily fam, int i) {
        DiffOp d(std::move(fam));
        Exps m(i + 1, 0);
        m[i] = 1;
        d.add_term(std::move(m), {}, Rat(1));
        return d;
    }
    // d/d(variable i)
    static DiffOp partial(VarFamily fam, int i) {
        DiffOp d(std::move(fam));
        Exps dv(i + 1, 0);
        dv[i] = 1;
        d.add_term({}, std::move(dv), Rat(1));
        return d;
    }

    const VarFamily& family() const { return fam_; }
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(Exps mono, Exps deriv, const Rat& c);

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp scaled(const Rat& s) const;

    // Normal-ordered composition (this applied after o... i.e. (*this) o (o)).
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.fam_ == b.fam_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    // Exact action on a polynomial of the same family.
    MultiPoly apply(const MultiPoly& f) const;

    /* Restriction to the subalgebra of the first nvars variables: terms that
     * differentiate a dropped variable act as zero there and are removed;
     * a remaining term that still multiplies by a dropped variable would map
     * the subalgebra outside itself, which is an error. */
    DiffOp restricted(int nvars) const;

    std::vector<std::pair<Key, Rat>> canonical_terms() const;
    std::string str() const;

private:
    void check_family(const DiffOp& o) const {
        if (fam_ != o.fam_)
            throw std::invalid_argument("DiffOp family mismatch: " + fam_.describe() +
                                        " vs " + o.fam_.describe());
    }

    VarFamily fam_;
    std::map<Key, Rat> terms_;
};

inline DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

} // namespace cga

#endif
