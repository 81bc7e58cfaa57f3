#include "cga/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace cga {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

int Partition::multiplicity(int i) const {
    int m = 0;
    for (int p : parts_)
        if (p == i)
            ++m;
    return m;
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_)
        ++m[p];
    return m;
}

int Partition::eps() const {
    return (size() - length()) % 2 == 0 ? 1 : -1;
}

Rat Partition::zee() const {
    Rat z(1);
    for (auto [part, mult] : multiplicities())
        z *= Rat(part).pow(mult) * factorial(mult);
    return z;
}

Rat Partition::uu() const {
    Rat u = factorial(length());
    for (auto [part, mult] : multiplicities())
        u /= factorial(mult);
    return u;
}

Partition Partition::merged_with(const Partition& o) const {
    std::vector<int> merged;
    merged.reserve(parts_.size() + o.parts_.size());
    size_t i = 0, j = 0;
    while (i < parts_.size() || j < o.parts_.size()) {
        if (j == o.parts_.size() || (i < parts_.size() && parts_[i] >= o.parts_[j]))
            merged.push_back(parts_[i++]);
        else
            merged.push_back(o.parts_[j++]);
    }
    return Partition(std::move(merged));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    int top = std::min(n, max_part);
    // Descending first part yields lexicographically descending output.
    for (int k = top; k >= 1; --k) {
        stack.push_back(k);
        gen_partitions(n - k, k, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be >= 0");
    if (max_part < 1)
        throw std::invalid_argument("partitions_of: max_part must be >= 1");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, max_part, stack, out);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    return partitions_of(n, n > 0 ? n : 1);
}

long count_no_ones(int j) {
    long c = 0;
    for (const Partition& lam : partitions_of(j))
        if (!lam.has_part_one())
            ++c;
    return c;
}

long partition_count(int n) {
    return static_cast<long>(partitions_of(n).size());
}

} // namespace cga
