#include "cga/realization.hpp"

#include "cga/bernoulli.hpp"

#include <sstream>
#include <stdexcept>

namespace cga {

namespace {

// Variable layout: index 0 is t (X family) or u (Y family); x_n / y_n sit at
// index n+1. z_n sits at index n.
std::vector<int> single(int idx, int pow) {
    std::vector<int> e(idx + 1, 0);
    e[idx] = pow;
    return e;
}

std::vector<int> pair_exp(int idx1, int pow1, int idx2, int pow2) {
    std::vector<int> e(std::max(idx1, idx2) + 1, 0);
    e[idx1] += pow1;
    e[idx2] += pow2;
    return e;
}

void check_ell(int ell) {
    if (ell < 1)
        throw std::invalid_argument("realization: ell must be >= 1");
}

} // namespace

DiffOp pi(int ell, const Rat& delta, const Rat& p, const CgaElement& a) {
    check_ell(ell);
    if (a.ell != ell)
        throw std::invalid_argument("pi: element belongs to a different ell");
    const VarFamily fam = VarFamily::x(ell);
    const int t = 0;
    auto x = [](int n) { return n + 1; };
    const std::vector<Rat> B = bernoulli_numbers(2 * ell);
    const Rat drho = delta_rho(ell);
    DiffOp op(fam);

    using Tag = CgaElement::Tag;
    switch (a.tag) {
    case Tag::H:
        op.add_term({}, single(t, 1), Rat(-1));
        for (int j = 1; j <= ell - 1; ++j)
            for (int k = j; k <= ell - 1; ++k) {
                Rat c = -Rat(j % 2 == 1 ? 1 : -1) * B[j] * binomial(k, j);
                if (c.is_zero())
                    continue;
                op.add_term(pair_exp(t, j - 1, x(k), 1), single(x(k - j), 1), c);
            }
        break;

    case Tag::D:
        op.add_term(single(t, 1), single(t, 1), Rat(-2));
        for (int j = 0; j <= ell - 1; ++j)
            op.add_term(single(x(j), 1), single(x(j), 1), Rat(-2 * (ell - j)));
        op.add_term({}, {}, delta + drho);
        break;

    case Tag::C:
        op.add_term(single(t, 2), single(t, 1), Rat(-1));
        for (int j = 0; j <= ell - 1; ++j)
            op.add_term(pair_exp(t, 1, x(j), 1), single(x(j), 1), Rat(-(ell - j)));
        for (int j = 0; j <= ell - 2; ++j)
            op.add_term(single(x(j), 1), single(x(j + 1), 1), Rat(-(2 * ell - j)));
        op.add_term(single(t, 1), {}, delta + drho);
        for (int j = 1; j <= ell; ++j) {
            Rat c = Rat(ell + 1) * B[j] * binomial(ell, j);
            if (c.is_zero())
                continue;
            op.add_term(pair_exp(t, j, x(ell - 1), 1), single(x(ell - j), 1), c);
        }
        op.add_term(single(x(ell - 1), 1), {}, p * Rat(ell + 1));
        for (int j = 2; j <= ell - 1; ++j)
            for (int k = 0; k <= ell - 2; ++k) {
                Rat c = Rat(2 * (ell - 1 - k), k + 1) * B[j] * binomial(k + 1, j);
                if (c.is_zero())
                    continue;
                op.add_term(pair_exp(t, j, x(k), 1), single(x(k - j + 1), 1), c);
            }
        break;

    case Tag::P:
        if (a.n <= ell - 1) {
            op.add_term({}, single(x(a.n), 1), Rat(-1));
            for (int j = 1; j <= a.n; ++j) {
                Rat c = -Rat(j % 2 == 0 ? 1 : -1) * B[j] * binomial(a.n, j);
                if (c.is_zero())
                    continue;
                op.add_term(single(t, j), single(x(a.n - j), 1), c);
            }
        } else if (a.n == ell) {
            op.add_term(single(t, 1), single(x(ell - 1), 1), Rat(-ell));
            op.add_term({}, {}, p);
        } else {
            const int n = a.n;
            for (int j = 0; j <= ell - 1; ++j)
                for (int k = n - ell + 1; k <= n - j; ++k) {
                    Rat c = -B[j] * binomial(n, k) * binomial(n - k, j);
                    if (c.is_zero())
                        continue;
                    op.add_term(single(t, k + j), single(x(n - k - j), 1), c);
                }
            op.add_term(single(t, n - ell), {}, p * binomial(n, ell));
        }
        break;
    }
    return op;
}

DiffOp pi_hat(int ell, const Rat& delta, const Rat& p, const CgaElement& a) {
    check_ell(ell);
    if (a.ell != ell)
        throw std::invalid_argument("pi_hat: element belongs to a different ell");
    const VarFamily fam = VarFamily::y(ell);
    const int u = 0;
    auto y = [](int n) { return n + 1; };
    const std::vector<Rat> B = bernoulli_numbers(2 * ell);
    const Rat drho = delta_rho(ell);
    DiffOp op(fam);

    using Tag = CgaElement::Tag;
    switch (a.tag) {
    case Tag::H:
        op.add_term(single(u, 1), {}, Rat(-1));
        for (int j = 1; j <= ell - 1; ++j)
            for (int k = j; k <= ell - 1; ++k) {
                Rat c = B[j] * binomial(k, j);
                if (c.is_zero())
                    continue;
                op.add_term(single(y(k - j), 1), pair_exp(y(k), 1, u, j - 1), c);
            }
        break;

    case Tag::D:
        op.add_term(single(u, 1), single(u, 1), Rat(2));
        for (int j = 0; j <= ell - 1; ++j)
            op.add_term(single(y(j), 1), single(y(j), 1), Rat(2 * (ell - j)));
        op.add_term({}, {}, delta - drho);
        break;

    case Tag::C:
        op.add_term(single(u, 1), single(u, 2), Rat(-1));
        for (int j = 0; j <= ell - 1; ++j)
            op.add_term(single(y(j), 1), pair_exp(y(j), 1, u, 1), Rat(-(ell - j)));
        for (int j = 0; j <= ell - 2; ++j)
            op.add_term(single(y(j + 1), 1), single(y(j), 1), Rat(2 * ell - j));
        op.add_term({}, single(u, 1), -(delta - drho));
        for (int j = 1; j <= ell; ++j) {
            Rat c = -Rat(j % 2 == 0 ? 1 : -1) * Rat(ell + 1) * B[j] * binomial(ell, j);
            if (c.is_zero())
                continue;
            op.add_term(single(y(ell - j), 1), pair_exp(y(ell - 1), 1, u, j), c);
        }
        op.add_term({}, single(y(ell - 1), 1), -(p * Rat(ell + 1)));
        for (int j = 2; j <= ell - 1; ++j)
            for (int k = 0; k <= ell - 2; ++k) {
                Rat c = -Rat(j % 2 == 0 ? 1 : -1) * Rat(2 * (ell - 1 - k), k + 1) * B[j] *
                        binomial(k + 1, j);
                if (c.is_zero() || k - j + 1 < 0)
                    continue;
                op.add_term(single(y(k - j + 1), 1), pair_exp(y(k), 1, u, j), c);
            }
        break;

    case Tag::P:
        if (a.n <= ell - 1) {
            op.add_term(single(y(a.n), 1), {}, Rat(-1));
            for (int j = 1; j <= a.n; ++j) {
                Rat c = -B[j] * binomial(a.n, j);
                if (c.is_zero())
                    continue;
                op.add_term(single(y(a.n - j), 1), single(u, j), c);
            }
        } else if (a.n == ell) {
            op.add_term(single(y(ell - 1), 1), single(u, 1), Rat(ell));
            op.add_term({}, {}, p);
        } else {
            const int n = a.n;
            for (int j = 0; j <= ell - 1; ++j)
                for (int k = n - ell + 1; k <= n - j; ++k) {
                    Rat c = -Rat((k + j) % 2 == 0 ? 1 : -1) * B[j] * binomial(n, k) *
                            binomial(n - k, j);
                    if (c.is_zero())
                        continue;
                    op.add_term(single(y(n - k - j), 1), single(u, k + j), c);
                }
            Rat c = Rat((n - ell) % 2 == 0 ? 1 : -1) * p * binomial(n, ell);
            op.add_term({}, single(u, n - ell), c);
        }
        break;
    }
    return op;
}

DiffOp pi_hat_res(int ell, const Rat& delta, const Rat& p, const CgaElement& a) {
    check_ell(ell);
    if (a.ell != ell)
        throw std::invalid_argument("pi_hat_res: element belongs to a different ell");
    const VarFamily fam = VarFamily::z(ell);
    DiffOp op(fam);

    using Tag = CgaElement::Tag;
    if (a.tag == Tag::P && a.n == ell) {
        op.add_term({}, {}, p);
        return op;
    }
    if (a.tag == Tag::D) {
        for (int n = 0; n <= ell - 1; ++n)
            op.add_term(single(n, 1), single(n, 1), Rat(2 * (n + 1)));
        op.add_term({}, {}, delta - delta_rho(ell));
        return op;
    }
    if (a.tag == Tag::C) {
        for (int n = 0; n <= ell - 2; ++n)
            op.add_term(single(n, 1), single(n + 1, 1), Rat(1));
        op.add_term({}, single(0, 1), -(p / factorial(ell)));
        return op;
    }
    throw std::invalid_argument("pi_hat_res: only P_ell, D, C act on the u-free subalgebra");
}

DiffOp fourier(const DiffOp& op) {
    if (op.family().kind() != VarFamily::Kind::X)
        throw std::invalid_argument("fourier: expected an X-family operator");
    const VarFamily target = VarFamily::y(op.family().ell());
    DiffOp out(target);
    for (const auto& [key, c] : op.terms()) {
        const auto& [mono, deriv] = key;
        // F(prod vars^mono * prod d^deriv) = prod (-d)^mono * prod vars^deriv,
        // re-normal-ordered by one composition.
        long sign_pow = 0;
        for (int e : mono)
            sign_pow += e;
        DiffOp left(target), right(target);
        left.add_term({}, mono, sign_pow % 2 == 0 ? c : -c);
        right.add_term(deriv, {}, Rat(1));
        out += left * right;
    }
    return out;
}

DiffOp t1_op(const Rat& c, int ell) {
    check_ell(ell);
    const VarFamily fam = VarFamily::z(ell);
    DiffOp op(fam);
    for (int n = 0; n <= ell - 2; ++n)
        op.add_term(single(n, 1), single(n + 1, 1), Rat(1));
    op.add_term({}, single(0, 1), -c);
    return op;
}

Sl2Triple sl2_triple(const Rat& c, int ell) {
    check_ell(ell);
    const VarFamily fam = VarFamily::z(ell);
    DiffOp t0(fam), tm1(fam);
    for (int n = 0; n <= ell - 1; ++n)
        t0.add_term(single(n, 1), single(n, 1), Rat(n + 1));
    // c conjugate = c: scalars are rational, so |c|^2 = c^2
    t0.add_term({}, {}, c * c / Rat(2));
    for (int n = 0; n <= ell - 2; ++n)
        tm1.add_term(single(n + 1, 1), single(n, 1), Rat((n + 1) * (n + 2)));
    tm1.add_term(single(0, 1), {}, -c);
    return {t1_op(c, ell), t0, tm1};
}

bool sl2_relations_hold(const Rat& c, int ell) {
    check_ell(ell);
    Sl2Triple w = sl2_triple(c, ell + 1);
    DiffOp r1 = commutator(w.t0, w.t1) + w.t1;
    DiffOp r2 = commutator(w.t1, w.tm1) - w.t0.scaled(Rat(2));
    DiffOp r3 = commutator(w.t0, w.tm1) - w.tm1;
    return r1.restricted(ell).is_zero() && r2.restricted(ell).is_zero() &&
           r3.restricted(ell).is_zero();
}

HomReport check_homomorphism(int ell, const Rat& delta, const Rat& p, Rep rep) {
    check_ell(ell);
    auto realize = [&](const CgaElement& a) {
        return rep == Rep::Pi ? pi(ell, delta, p, a) : pi_hat(ell, delta, p, a);
    };
    const VarFamily fam = rep == Rep::Pi ? VarFamily::x(ell) : VarFamily::y(ell);
    HomReport report;
    std::vector<CgaElement> basis = cga_basis(ell);
    for (const CgaElement& a : basis)
        for (const CgaElement& b : basis) {
            DiffOp lhs = commutator(realize(a), realize(b));
            DiffOp rhs(fam);
            for (const auto& [coef, elem] : bracket(a, b))
                rhs += realize(elem).scaled(coef);
            DiffOp residual = lhs - rhs;
            if (!residual.is_zero())
                report.failures.push_back({a, b, residual});
        }
    return report;
}

std::string HomReport::summary() const {
    if (ok())
        return "all pairs preserve brackets";
    std::ostringstream os;
    os << failures.size() << " failing pair(s):";
    for (const auto& f : failures)
        os << " [" << f.a.name() << "," << f.b.name() << "] residual " << f.residual.str();
    return os.str();
}

} // namespace cga
