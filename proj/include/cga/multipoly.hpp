#ifndef CGA_MULTIPOLY_HPP
#define CGA_MULTIPOLY_HPP

#include "cga/eisenstein.hpp"
#include "cga/rational.hpp"
#include "cga/varfamily.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace cga {

/* Sparse multivariate polynomial over an exact scalar ring K (Rat or Eis).
 * Term keys are exponent vectors with trailing zeros stripped, so the key
 * of a monomial does not depend on the declared width of its family. No
 * zero coefficient is ever stored. */
template <class K>
class BasicPoly {
public:
    using Exps = std::vector<int>;

    explicit BasicPoly(VarFamily fam) : fam_(std::move(fam)) {}

    static BasicPoly zero(VarFamily fam) { return BasicPoly(std::move(fam)); }

    static BasicPoly constant(VarFamily fam, K c) {
        BasicPoly p(std::move(fam));
        p.add_term({}, std::move(c));
        return p;
    }

    static BasicPoly variable(VarFamily fam, int i) {
        Exps e(i + 1, 0);
        e[i] = 1;
        return monomial(std::move(fam), std::move(e), K(1));
    }

    static BasicPoly monomial(VarFamily fam, Exps e, K c) {
        BasicPoly p(std::move(fam));
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    const VarFamily& family() const { return fam_; }
    const std::map<Exps, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(Exps e, K c) {
        if (c.is_zero())
            return;
        strip(e);
        check_exps(e);
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    K coefficient(Exps e) const {
        strip(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    BasicPoly operator-() const {
        BasicPoly r(fam_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        check_family(o);
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero())
                    terms_.erase(it);
            }
        }
        return *this;
    }

    BasicPoly& operator-=(const BasicPoly& o) {
        check_family(o);
        for (const auto& [e, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(e, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second.is_zero())
                    terms_.erase(it);
            }
        }
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        a.check_family(b);
        BasicPoly r(a.fam_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                K c = ca * cb;
                if (c.is_zero())
                    continue;
                r.add_term(exps_mul(ea, eb), std::move(c));
            }
        return r;
    }

    BasicPoly scaled(const K& s) const {
        BasicPoly r(fam_);
        if (s.is_zero())
            return r;
        for (const auto& [e, c] : terms_) {
            K sc = c * s;
            if (!sc.is_zero())
                r.terms_.emplace(e, std::move(sc));
        }
        return r;
    }

    BasicPoly pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("BasicPoly::pow: negative exponent");
        BasicPoly r = constant(fam_, K(1));
        for (int i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.fam_ == b.fam_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    long weighted_grade_of(const Exps& e) const {
        long g = 0;
        for (size_t i = 0; i < e.size(); ++i)
            g += fam_.weight(static_cast<int>(i)) * e[i];
        return g;
    }

    // Degree in the ordinary sense (all weights 1); 0 for the zero polynomial.
    long total_degree() const {
        long d = 0;
        for (const auto& [e, c] : terms_) {
            long s = 0;
            for (int x : e)
                s += x;
            d = std::max(d, s);
        }
        return d;
    }

    // -1 when no variable occurs.
    int max_var_index() const {
        int m = -1;
        for (const auto& [e, c] : terms_)
            m = std::max(m, static_cast<int>(e.size()) - 1);
        return m;
    }

    // Weighted-homogeneous degree; nullopt when terms of different grades mix.
    // The zero polynomial reports grade 0.
    std::optional<long> homogeneous_grade() const {
        std::optional<long> g;
        for (const auto& [e, c] : terms_) {
            long ge = weighted_grade_of(e);
            if (!g)
                g = ge;
            else if (*g != ge)
                return std::nullopt;
        }
        return g ? g : std::optional<long>(0);
    }

    // Split into weighted-homogeneous pieces; recombination restores the input.
    std::map<long, BasicPoly> graded_components() const {
        std::map<long, BasicPoly> out;
        for (const auto& [e, c] : terms_) {
            long g = weighted_grade_of(e);
            auto it = out.find(g);
            if (it == out.end())
                it = out.emplace(g, BasicPoly(fam_)).first;
            it->second.terms_.emplace(e, c);
        }
        return out;
    }

    // Exact division by a single monomial (coefficient one). Throws
    // std::domain_error("not divisible") when any term lacks the exponents.
    BasicPoly exact_divide(Exps mono) const {
        strip(mono);
        BasicPoly r(fam_);
        for (const auto& [e, c] : terms_) {
            Exps q = e;
            for (size_t i = 0; i < mono.size(); ++i) {
                if (i >= q.size() || q[i] < mono[i])
                    throw std::domain_error("not divisible");
                q[i] -= mono[i];
            }
            strip(q);
            r.terms_.emplace(std::move(q), c);
        }
        return r;
    }

    BasicPoly mul_monomial(Exps mono, const K& c) const {
        BasicPoly r(fam_);
        if (c.is_zero())
            return r;
        strip(mono);
        for (const auto& [e, cc] : terms_)
            r.add_term(exps_mul(e, mono), cc * c);
        return r;
    }

    // Each occurring variable i is replaced by scale * target_var; the map
    // must cover every variable that occurs.
    BasicPoly substitute_linear(const VarFamily& target,
                                const std::map<int, std::pair<K, int>>& m) const {
        BasicPoly r(target);
        for (const auto& [e, c] : terms_) {
            K coeff = c;
            Exps out;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                auto it = m.find(static_cast<int>(i));
                if (it == m.end())
                    throw std::invalid_argument("substitute_linear: unmapped variable " +
                                                fam_.var_name(static_cast<int>(i)));
                const auto& [scale, tvar] = it->second;
                coeff *= scale.pow(e[i]);
                if (static_cast<size_t>(tvar) >= out.size())
                    out.resize(tvar + 1, 0);
                out[tvar] += e[i];
            }
            r.add_term(std::move(out), std::move(coeff));
        }
        return r;
    }

    // Exact evaluation; every occurring variable needs a coordinate.
    K evaluate(const std::map<int, K>& point) const {
        K s;
        for (const auto& [e, c] : terms_) {
            K v = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                auto it = point.find(static_cast<int>(i));
                if (it == point.end())
                    throw std::invalid_argument("evaluate: missing coordinate for " +
                                                fam_.var_name(static_cast<int>(i)));
                v *= it->second.pow(e[i]);
            }
            s += v;
        }
        return s;
    }

    BasicPoly derivative(int var) const {
        BasicPoly r(fam_);
        for (const auto& [e, c] : terms_) {
            if (static_cast<size_t>(var) >= e.size() || e[var] == 0)
                continue;
            Exps q = e;
            int k = q[var]--;
            strip(q);
            r.add_term(std::move(q), c * K(k));
        }
        return r;
    }

    // Definite antiderivative from 0 in the given variable.
    BasicPoly antiderivative(int var) const {
        fam_.weight(var); // index check
        BasicPoly r(fam_);
        for (const auto& [e, c] : terms_) {
            Exps q = e;
            if (static_cast<size_t>(var) >= q.size())
                q.resize(var + 1, 0);
            int k = ++q[var];
            r.add_term(std::move(q), c / K(k));
        }
        return r;
    }

    // Same-kind family widening (e.g. Z(2) into Z(5)).
    BasicPoly embedded(const VarFamily& wider) const {
        if (wider == fam_)
            return *this;
        if (wider.kind() != fam_.kind())
            throw std::invalid_argument("embedded: kind mismatch");
        if (max_var_index() >= wider.var_count())
            throw std::invalid_argument("embedded: target family too narrow");
        BasicPoly r(wider);
        r.terms_ = terms_;
        return r;
    }

    // Terms sorted for serialization: grade ascending, then exponent vectors
    // lexicographically.
    std::vector<std::pair<Exps, K>> canonical_terms() const {
        std::vector<std::pair<Exps, K>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
            long ga = weighted_grade_of(a.first), gb = weighted_grade_of(b.first);
            if (ga != gb)
                return ga < gb;
            return a.first < b.first;
        });
        return v;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : canonical_terms()) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                os << "*" << fam_.var_name(static_cast<int>(i));
                if (e[i] > 1)
                    os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    void check_family(const BasicPoly& o) const {
        if (fam_ != o.fam_)
            throw std::invalid_argument("variable-family mismatch: " + fam_.describe() +
                                        " vs " + o.fam_.describe());
    }

    void check_exps(const Exps& e) const {
        for (int x : e)
            if (x < 0)
                throw std::invalid_argument("BasicPoly: negative exponent");
        if (static_cast<int>(e.size()) > fam_.var_count())
            throw std::out_of_range("BasicPoly: exponent vector exceeds " + fam_.describe());
    }

    static void strip(Exps& e) {
        while (!e.empty() && e.back() == 0)
            e.pop_back();
    }

    static Exps exps_mul(const Exps& a, const Exps& b) {
        Exps r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i)
            r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i)
            r[i] += b[i];
        return r;
    }

    VarFamily fam_;
    std::map<Exps, K> terms_;
};

using MultiPoly = BasicPoly<Rat>;
using EisPoly = BasicPoly<Eis>;

// Checked conversions for the root-of-unity cross-check route.
inline EisPoly to_eisenstein(const MultiPoly& p) {
    EisPoly r(p.family());
    for (const auto& [e, c] : p.terms())
        r.add_term(e, Eis(c));
    return r;
}

// Throws when any imaginary part fails to cancel.
inline MultiPoly to_rational(const EisPoly& p) {
    MultiPoly r(p.family());
    for (const auto& [e, c] : p.terms())
        r.add_term(e, c.rational_part());
    return r;
}

} // namespace cga

#endif
