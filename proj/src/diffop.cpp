#include "cga/diffop.hpp"

#include <algorithm>
#include <sstream>

namespace cga {

namespace {

void strip(std::vector<int>& e) {
    while (!e.empty() && e.back() == 0)
        e.pop_back();
}

int index_span(const std::vector<int>& e) {
    return static_cast<int>(e.size());
}

} // namespace

void DiffOp::add_term(Exps mono, Exps deriv, const Rat& c) {
    if (c.is_zero())
        return;
    strip(mono);
    strip(deriv);
    for (int x : mono)
        if (x < 0)
            throw std::invalid_argument("DiffOp: negative exponent");
    for (int x : deriv)
        if (x < 0)
            throw std::invalid_argument("DiffOp: negative derivative order");
    if (index_span(mono) > fam_.var_count() || index_span(deriv) > fam_.var_count())
        throw std::out_of_range("DiffOp: variable index outside " + fam_.describe());
    Key key(std::move(mono), std::move(deriv));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r(fam_);
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, -c);
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_family(o);
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_family(o);
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

DiffOp DiffOp::scaled(const Rat& s) const {
    DiffOp r(fam_);
    if (s.is_zero())
        return r;
    for (const auto& [k, c] : terms_)
        r.terms_.emplace(k, c * s);
    return r;
}

/* Single-term composition: x^a d^b . x^c d^d. Moving d^b across x^c gives
 *   d^b x^c = sum_k prod_i k_i! C(b_i,k_i) C(c_i,k_i) x^{c-k} d^{b-k},
 * the product running over variables and k over componentwise 0..min(b,c). */
DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    a.check_family(b);
    DiffOp r(a.fam_);
    for (const auto& [ka, ca] : a.terms_) {
        const auto& [amono, aderiv] = ka;
        for (const auto& [kb, cb] : b.terms_) {
            const auto& [bmono, bderiv] = kb;
            size_t nv = std::max(aderiv.size(), bmono.size());
            std::vector<int> kmax(nv, 0);
            for (size_t i = 0; i < nv; ++i) {
                int bi = i < aderiv.size() ? aderiv[i] : 0;
                int ci = i < bmono.size() ? bmono[i] : 0;
                kmax[i] = std::min(bi, ci);
            }
            std::vector<int> k(nv, 0);
            while (true) {
                Rat coeff = ca * cb;
                for (size_t i = 0; i < nv; ++i) {
                    if (k[i] == 0)
                        continue;
                    int bi = aderiv[i];
                    int ci = bmono[i];
                    coeff *= factorial(k[i]) * binomial(bi, k[i]) * binomial(ci, k[i]);
                }
                std::vector<int> mono(std::max({amono.size(), bmono.size()}), 0);
                for (size_t i = 0; i < amono.size(); ++i)
                    mono[i] += amono[i];
                for (size_t i = 0; i < bmono.size(); ++i)
                    mono[i] += bmono[i];
                for (size_t i = 0; i < nv; ++i)
                    if (k[i])
                        mono[i] -= k[i];
                std::vector<int> deriv(std::max({aderiv.size(), bderiv.size()}), 0);
                for (size_t i = 0; i < aderiv.size(); ++i)
                    deriv[i] += aderiv[i];
                for (size_t i = 0; i < bderiv.size(); ++i)
                    deriv[i] += bderiv[i];
                for (size_t i = 0; i < nv; ++i)
                    if (k[i])
                        deriv[i] -= k[i];
                r.add_term(std::move(mono), std::move(deriv), coeff);

                // next k below kmax
                size_t pos = 0;
                while (pos < nv && k[pos] == kmax[pos])
                    k[pos++] = 0;
                if (pos == nv)
                    break;
                ++k[pos];
            }
        }
    }
    return r;
}

MultiPoly DiffOp::apply(const MultiPoly& f) const {
    if (fam_ != f.family())
        throw std::invalid_argument("DiffOp::apply family mismatch: " + fam_.describe() +
                                    " vs " + f.family().describe());
    MultiPoly out(fam_);
    for (const auto& [key, c] : terms_) {
        const auto& [mono, deriv] = key;
        for (const auto& [e, fc] : f.terms()) {
            Rat coeff = c * fc;
            std::vector<int> ne(std::max({e.size(), mono.size(), deriv.size()}), 0);
            for (size_t i = 0; i < e.size(); ++i)
                ne[i] = e[i];
            bool dead = false;
            for (size_t i = 0; i < deriv.size() && !dead; ++i) {
                for (int d = 0; d < deriv[i]; ++d) {
                    if (ne[i] == 0) {
                        dead = true;
                        break;
                    }
                    coeff *= Rat(ne[i]--);
                }
            }
            if (dead)
                continue;
            for (size_t i = 0; i < mono.size(); ++i)
                ne[i] += mono[i];
            out.add_term(std::move(ne), coeff);
        }
    }
    return out;
}

DiffOp DiffOp::restricted(int nvars) const {
    DiffOp r(fam_);
    for (const auto& [key, c] : terms_) {
        if (index_span(key.second) > nvars)
            continue; // differentiates a dropped variable: zero on the subalgebra
        if (index_span(key.first) > nvars)
            throw std::domain_error("DiffOp::restricted: term maps outside the subalgebra");
        r.terms_.emplace(key, c);
    }
    return r;
}

std::vector<std::pair<DiffOp::Key, Rat>> DiffOp::canonical_terms() const {
    return {terms_.begin(), terms_.end()};
}

std::string DiffOp::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        const auto& [mono, deriv] = key;
        for (size_t i = 0; i < mono.size(); ++i) {
            if (!mono[i])
                continue;
            os << "*" << fam_.var_name(static_cast<int>(i));
            if (mono[i] > 1)
                os << "^" << mono[i];
        }
        for (size_t i = 0; i < deriv.size(); ++i) {
            if (!deriv[i])
                continue;
            os << "*d[" << fam_.var_name(static_cast<int>(i)) << "]";
            if (deriv[i] > 1)
                os << "^" << deriv[i];
        }
    }
    return os.str();
}

} // namespace cga
