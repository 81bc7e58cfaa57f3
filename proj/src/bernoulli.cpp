#include "cga/bernoulli.hpp"

#include <stdexcept>

namespace cga {

std::vector<Rat> bernoulli_numbers(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("bernoulli_numbers: n must be >= 0");
    std::vector<Rat> b;
    b.reserve(n_max + 1);
    b.push_back(Rat(1));
    for (int n = 1; n <= n_max; ++n) {
        Rat s(0);
        for (int k = 0; k < n; ++k)
            s += binomial(n + 1, k) * b[k];
        b.push_back(-s / Rat(n + 1));
    }
    return b;
}

Rat bernoulli_number(int n) {
    return bernoulli_numbers(n)[n];
}

Rat bernoulli_poly(int n, const Rat& x) {
    std::vector<Rat> b = bernoulli_numbers(n);
    Rat s(0);
    for (int k = 0; k <= n; ++k)
        s += binomial(n, k) * b[k] * x.pow(n - k);
    return s;
}

} // namespace cga
