#include "cga/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace cga {

namespace {

VarFamily xfam(int nvars) {
    return VarFamily::gen(nvars, "x", 1);
}

// e_k over variables [offset, offset+count) of fam.
MultiPoly e_at(const VarFamily& fam, int offset, int count, int k) {
    MultiPoly r(fam);
    if (k == 0)
        return MultiPoly::constant(fam, Rat(1));
    if (k > count)
        return r;
    std::vector<int> idx(k);
    // iterate k-subsets of {0..count-1}
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::vector<int> e;
        for (int i : idx) {
            int v = offset + i;
            if (static_cast<size_t>(v) >= e.size())
                e.resize(v + 1, 0);
            e[v] = 1;
        }
        r.add_term(std::move(e), Rat(1));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == count - k + pos)
            --pos;
        if (pos < 0)
            break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i)
            idx[i] = idx[i - 1] + 1;
    }
    return r;
}

MultiPoly p_at(const VarFamily& fam, int offset, int count, int k) {
    MultiPoly r(fam);
    for (int i = 0; i < count; ++i) {
        std::vector<int> e(offset + i + 1, 0);
        e[offset + i] = k;
        r.add_term(std::move(e), Rat(1));
    }
    return r;
}

MultiPoly m_at(const VarFamily& fam, int offset, int count, const Partition& lam) {
    if (lam.length() > count)
        throw std::invalid_argument("expand_m: partition longer than variable count");
    MultiPoly r(fam);
    std::vector<int> exps(count, 0);
    for (int i = 0; i < lam.length(); ++i)
        exps[i] = lam.parts()[i];
    std::sort(exps.begin(), exps.end());
    do {
        std::vector<int> e(offset + count, 0);
        for (int i = 0; i < count; ++i)
            e[offset + i] = exps[i];
        r.add_term(std::move(e), Rat(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return r;
}

} // namespace

MultiPoly expand_e(int k, int nvars) {
    if (k < 0 || nvars < 1)
        throw std::invalid_argument("expand_e: bad arguments");
    return e_at(xfam(nvars), 0, nvars, k);
}

MultiPoly expand_p(int k, int nvars) {
    if (k < 1 || nvars < 1)
        throw std::invalid_argument("expand_p: bad arguments");
    return p_at(xfam(nvars), 0, nvars, k);
}

MultiPoly expand_h(int k, int nvars) {
    if (k < 0 || nvars < 1)
        throw std::invalid_argument("expand_h: bad arguments");
    MultiPoly r(xfam(nvars));
    // all monomials of total degree k, coefficient one
    std::vector<int> e(nvars, 0);
    e[0] = k;
    while (true) {
        r.add_term(e, Rat(1));
        // next composition of k into nvars parts
        int i = nvars - 2;
        while (i >= 0 && e[i] == 0)
            --i;
        if (i < 0)
            break;
        int rest = e[nvars - 1];
        e[nvars - 1] = 0;
        --e[i];
        e[i + 1] = rest + 1;
    }
    return r;
}

MultiPoly expand_m(const Partition& lam, int nvars) {
    if (nvars < 1)
        throw std::invalid_argument("expand_m: bad arguments");
    return m_at(xfam(nvars), 0, nvars, lam);
}

PExpr e_in_p(int n) {
    if (n < 1)
        throw std::invalid_argument("e_in_p: n must be >= 1");
    PExpr e;
    for (const Partition& lam : partitions_of(n))
        e.add_term(lam, Rat(lam.eps()) / lam.zee());
    return e;
}

MultiPoly u_poly(int n) {
    if (n < 1)
        throw std::invalid_argument("u_poly: n must be >= 1");
    VarFamily fam = VarFamily::gen(n, "y", 1);
    MultiPoly u(fam);
    for (const Partition& lam : partitions_of(n)) {
        Rat coeff = Rat(lam.eps()) * Rat(n) * factorial(lam.length() - 1);
        std::vector<int> e(lam.max_part(), 0);
        for (auto [part, mult] : lam.multiplicities()) {
            coeff /= factorial(mult);
            e[part - 1] = mult;
        }
        u.add_term(std::move(e), coeff);
    }
    return u;
}

PExpr reduce_p(int k, int r) {
    if (k < 1 || r < 1)
        throw std::invalid_argument("reduce_p: arguments must be >= 1");
    if (k <= r)
        return PExpr::p(k);
    std::vector<PExpr> es(r + 1);
    for (int i = 1; i <= r; ++i)
        es[i] = e_in_p(i);
    std::vector<PExpr> ps(k + 1);
    for (int j = 1; j <= r; ++j)
        ps[j] = PExpr::p(j);
    for (int j = r + 1; j <= k; ++j) {
        PExpr s;
        for (int i = 1; i <= r; ++i) {
            PExpr term = es[i] * ps[j - i];
            s += (i % 2 == 1) ? term : -term;
        }
        ps[j] = s;
    }
    return ps[k];
}

PExpr reduce_p_mod_p1(int k, int r) {
    return reduce_p(k, r).with_p1_zero();
}

std::map<std::pair<Partition, Partition>, Rat> a_coeffs(int n, int r) {
    if (n < 0 || r < 1)
        throw std::invalid_argument("a_coeffs: bad arguments");
    std::map<std::pair<Partition, Partition>, Rat> out;
    for (const Partition& lam : partitions_of(std::max(n, 0))) {
        PExpr prod = PExpr::one();
        for (int part : lam.parts())
            prod = prod * reduce_p(part, r);
        for (const auto& [mu, c] : prod.terms())
            out.emplace(std::make_pair(lam, mu), c);
    }
    return out;
}

namespace {

MultiPoly truncate_deg(const MultiPoly& p, int max_deg) {
    MultiPoly r(p.family());
    for (const auto& [e, c] : p.terms()) {
        long d = 0;
        for (int x : e)
            d += x;
        if (d <= max_deg)
            r.add_term(e, c);
    }
    return r;
}

} // namespace

bool cauchy_check(int nx, int ny, int max_deg) {
    if (nx < 1 || ny < 1 || max_deg < 1)
        throw std::invalid_argument("cauchy_check: arguments must be >= 1");
    VarFamily fam = VarFamily::gen(nx + ny, "v", 1);

    // product side
    MultiPoly prod = MultiPoly::constant(fam, Rat(1));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            std::vector<int> e(std::max(i, nx + j) + 1, 0);
            e[i] = 1;
            e[nx + j] = 1;
            MultiPoly factor = MultiPoly::constant(fam, Rat(1));
            factor.add_term(std::move(e), Rat(1));
            prod = prod * factor;
        }
    prod = truncate_deg(prod, max_deg);

    // sum of e_lambda(x) m_lambda(y); terms are bihomogeneous of degree 2|lambda|
    MultiPoly em(fam);
    for (int n = 0; 2 * n <= max_deg; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            if (lam.length() > ny || lam.max_part() > nx)
                continue;
            MultiPoly el = MultiPoly::constant(fam, Rat(1));
            for (int part : lam.parts())
                el = el * e_at(fam, 0, nx, part);
            em += el * m_at(fam, nx, ny, lam);
        }
    }

    // sum of eps_lambda p_lambda(x) p_lambda(y) / z_lambda
    MultiPoly pp(fam);
    for (int n = 0; 2 * n <= max_deg; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            MultiPoly term = MultiPoly::constant(fam, Rat(lam.eps()) / lam.zee());
            for (int part : lam.parts())
                term = term * p_at(fam, 0, nx, part);
            for (int part : lam.parts())
                term = term * p_at(fam, nx, ny, part);
            pp += term;
        }
    }

    return prod == em && prod == pp;
}

std::vector<Rat> power_sum_system_poly(const std::vector<Rat>& a) {
    int r = static_cast<int>(a.size());
    if (r < 1)
        throw std::invalid_argument("power_sum_system_poly: need r >= 1");
    std::vector<Rat> e(r + 1);
    e[0] = Rat(1);
    for (int i = 1; i <= r; ++i) {
        Rat s(0);
        for (int j = 1; j <= i; ++j) {
            Rat term = e[i - j] * a[j - 1];
            s += (j % 2 == 1) ? term : -term;
        }
        e[i] = s / Rat(i);
    }
    std::vector<Rat> coeffs(r + 1);
    for (int i = 0; i <= r; ++i)
        coeffs[i] = (i % 2 == 0) ? e[i] : -e[i];
    return coeffs;
}

PExpr pexpr_substitute(const MultiPoly& poly, const std::vector<PExpr>& values) {
    PExpr out;
    for (const auto& [e, c] : poly.terms()) {
        PExpr term = PExpr::constant(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (i >= values.size())
                throw std::invalid_argument("pexpr_substitute: missing value");
            term = term * values[i].pow(e[i]);
        }
        out += term;
    }
    return out;
}

} // namespace cga
