#ifndef CGA_PEXPR_HPP
#define CGA_PEXPR_HPP

#include "cga/partition.hpp"
#include "cga/rational.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace cga {

/* Polynomial in abstract commuting generators p1, p2, p3, ... with rational
 * coefficients. Keys are partitions (monomials in the p's are multisets of
 * indices); a key lambda carries weighted degree |lambda|. */
class PExpr {
public:
    PExpr() = default;

    static PExpr zero() { return PExpr(); }
    static PExpr one() { return constant(Rat(1)); }
    static PExpr constant(const Rat& c) {
        PExpr e;
        e.add_term(Partition(), c);
        return e;
    }
    // The generator p_k.
    static PExpr p(int k) {
        if (k < 1)
            throw std::invalid_argument("PExpr::p: index must be >= 1");
        PExpr e;
        e.add_term(Partition({k}), Rat(1));
        return e;
    }

    const std::map<Partition, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Partition& key, const Rat& c) {
        if (c.is_zero())
            return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Rat coefficient(const Partition& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    PExpr operator-() const {
        PExpr r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, -c);
        return r;
    }

    PExpr& operator+=(const PExpr& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, c);
        return *this;
    }
    PExpr& operator-=(const PExpr& o) {
        for (const auto& [k, c] : o.terms_)
            add_term(k, -c);
        return *this;
    }
    friend PExpr operator+(PExpr a, const PExpr& b) { return a += b; }
    friend PExpr operator-(PExpr a, const PExpr& b) { return a -= b; }

    friend PExpr operator*(const PExpr& a, const PExpr& b) {
        PExpr r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.merged_with(kb), ca * cb);
        return r;
    }

    PExpr scaled(const Rat& s) const {
        PExpr r;
        if (s.is_zero())
            return r;
        for (const auto& [k, c] : terms_)
            r.terms_.emplace(k, c * s);
        return r;
    }

    PExpr pow(int e) const {
        if (e < 0)
            throw std::invalid_argument("PExpr::pow: negative exponent");
        PExpr r = one();
        for (int i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    // Image under p1 -> 0: drop every term whose key contains a part 1.
    PExpr with_p1_zero() const {
        PExpr r;
        for (const auto& [k, c] : terms_)
            if (!k.has_part_one())
                r.terms_.emplace(k, c);
        return r;
    }

    // Exact evaluation with p_k -> sum_i xs[i]^k.
    Rat evaluate(const std::vector<Rat>& xs) const {
        Rat s(0);
        for (const auto& [k, c] : terms_) {
            Rat v = c;
            for (int part : k.parts()) {
                Rat ps(0);
                for (const Rat& x : xs)
                    ps += x.pow(part);
                v *= ps;
            }
            s += v;
        }
        return s;
    }

    friend bool operator==(const PExpr& a, const PExpr& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PExpr& a, const PExpr& b) { return !(a == b); }

    // Sorted for serialization: |lambda| ascending, then part lists
    // lexicographically descending (the partition enumeration order).
    std::vector<std::pair<Partition, Rat>> canonical_terms() const {
        std::vector<std::pair<Partition, Rat>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            int sa = a.first.size(), sb = b.first.size();
            if (sa != sb)
                return sa < sb;
            return b.first < a.first;
        });
        return v;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : canonical_terms()) {
            if (!first)
                os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (auto [part, mult] : k.multiplicities()) {
                os << "*p" << part;
                if (mult > 1)
                    os << "^" << mult;
            }
        }
        return os.str();
    }

private:
    std::map<Partition, Rat> terms_;
};

} // namespace cga

#endif
