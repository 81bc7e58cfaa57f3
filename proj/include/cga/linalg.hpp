#ifndef CGA_LINALG_HPP
#define CGA_LINALG_HPP

#include "cga/rational.hpp"

#include <vector>

namespace cga {

/* Dense rational matrix with exact elimination. Pivoting is deterministic
 * (first nonzero column, smallest row index), so echelon forms and nullspace
 * bases are reproducible. */
class RatMatrix {
public:
    RatMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rat& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    // Reduce to reduced row echelon form; returns the pivot columns.
    std::vector<size_t> rref();

    size_t rank() const;

    /* Basis of the right nullspace. One vector per free column, carrying 1
     * in its own free column and 0 in the other free ones. */
    std::vector<std::vector<Rat>> nullspace() const;

private:
    size_t rows_, cols_;
    std::vector<Rat> a_;
};

} // namespace cga

#endif
