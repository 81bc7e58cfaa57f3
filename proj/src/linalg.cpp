#include "cga/linalg.hpp"

#include <algorithm>

namespace cga {

std::vector<size_t> RatMatrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t pr = row;
        while (pr < rows_ && at(pr, col).is_zero())
            ++pr;
        if (pr == rows_)
            continue;
        if (pr != row)
            for (size_t j = 0; j < cols_; ++j)
                std::swap(at(row, j), at(pr, j));
        Rat inv = at(row, col).inv();
        for (size_t j = col; j < cols_; ++j)
            at(row, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero())
                continue;
            Rat f = at(i, col);
            for (size_t j = col; j < cols_; ++j)
                at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t RatMatrix::rank() const {
    RatMatrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
    RatMatrix m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rat> v(cols_);
        v[free] = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace cga
