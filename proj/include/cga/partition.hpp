#ifndef CGA_PARTITION_HPP
#define CGA_PARTITION_HPP

#include "cga/rational.hpp"

#include <map>
#include <vector>

namespace cga {

/* Integer partition: non-increasing sequence of positive parts. The empty
 * sequence is the unique partition of 0. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;   // |lambda|, sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    int multiplicity(int i) const;
    // (part, multiplicity) pairs, parts ascending
    std::map<int, int> multiplicities() const;
    bool has_part_one() const { return multiplicity(1) > 0; }

    int eps() const;  // (-1)^{size - length}
    Rat zee() const;  // prod_i i^{m_i} * m_i!
    Rat uu() const;   // length! / prod_i m_i!

    // Multiset union of parts (product of the generators p_lambda).
    Partition merged_with(const Partition& o) const;

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts_ < y.parts_; }

    std::string str() const;  // "(3,1,1)" / "()"

private:
    std::vector<int> parts_;
};

// All partitions of n (parts <= max_part when given), each exactly once, in
// lexicographically descending order of part lists.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, int max_part);

// #{lambda of j with no part equal to 1}; 1 for j = 0, 0 for j = 1.
long count_no_ones(int j);

// p(n), by enumeration.
long partition_count(int n);

} // namespace cga

#endif
