#ifndef CGA_VARFAMILY_HPP
#define CGA_VARFAMILY_HPP

#include <stdexcept>
#include <string>

namespace cga {

/* Declared ordered variable set of a polynomial or operator.
 *
 *   Z(ell):  z0 .. z_{ell-1},  weighted grading deg z_n = n+1
 *   Y(ell):  u, y0 .. y_{ell-1},  deg u = 1, deg y_n = ell-n
 *   X(ell):  t, x0 .. x_{ell-1},  total degree only
 *   Gen:     base<k>, base<k+1>, ... (e.g. x1..xn, P0..P_{ell-1})
 */
class VarFamily {
public:
    enum class Kind { Z, Y, X, Gen };

    static VarFamily z(int ell) { return VarFamily(Kind::Z, ell); }
    static VarFamily y(int ell) { return VarFamily(Kind::Y, ell); }
    static VarFamily x(int ell) { return VarFamily(Kind::X, ell); }
    static VarFamily gen(int count, std::string base, int start = 1) {
        VarFamily f(Kind::Gen, count);
        f.base_ = std::move(base);
        f.start_ = start;
        return f;
    }

    Kind kind() const { return kind_; }
    int ell() const { return ell_; }

    int var_count() const {
        switch (kind_) {
        case Kind::Z: return ell_;
        case Kind::Y:
        case Kind::X: return ell_ + 1;
        case Kind::Gen: return ell_;
        }
        return 0;
    }

    std::string var_name(int i) const {
        check_index(i);
        switch (kind_) {
        case Kind::Z: return "z" + std::to_string(i);
        case Kind::Y: return i == 0 ? "u" : "y" + std::to_string(i - 1);
        case Kind::X: return i == 0 ? "t" : "x" + std::to_string(i - 1);
        case Kind::Gen: return base_ + std::to_string(start_ + i);
        }
        return {};
    }

    // Grading weight of variable i.
    long weight(int i) const {
        check_index(i);
        switch (kind_) {
        case Kind::Z: return i + 1;
        case Kind::Y: return i == 0 ? 1 : ell_ - (i - 1);
        case Kind::X:
        case Kind::Gen: return 1;
        }
        return 1;
    }

    bool z_like() const { return kind_ == Kind::Z; }

    friend bool operator==(const VarFamily& a, const VarFamily& b) {
        return a.kind_ == b.kind_ && a.ell_ == b.ell_ && a.base_ == b.base_ &&
               a.start_ == b.start_;
    }
    friend bool operator!=(const VarFamily& a, const VarFamily& b) { return !(a == b); }

    std::string describe() const {
        switch (kind_) {
        case Kind::Z: return "Z(" + std::to_string(ell_) + ")";
        case Kind::Y: return "Y(" + std::to_string(ell_) + ")";
        case Kind::X: return "X(" + std::to_string(ell_) + ")";
        case Kind::Gen: return "Gen(" + base_ + "," + std::to_string(ell_) + ")";
        }
        return {};
    }

private:
    VarFamily(Kind k, int ell) : kind_(k), ell_(ell) {
        if (ell < (k == Kind::Gen ? 0 : 1))
            throw std::invalid_argument("VarFamily: bad variable count");
    }

    void check_index(int i) const {
        if (i < 0 || i >= var_count())
            throw std::out_of_range("VarFamily: variable index " + std::to_string(i) +
                                    " outside " + describe());
    }

    Kind kind_;
    int ell_;
    std::string base_;
    int start_ = 1;
};

} // namespace cga

#endif
