#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <vector>

#include "npq/rational.hpp"

namespace npq {

/**
 * Integer partition: a weakly decreasing sequence of positive parts.
 * The empty partition is the unique partition of 0 and is a first-class
 * value. Partitions are immutable after construction so they can serve
 * as cache keys.
 */
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts the given parts into canonical (decreasing) order first.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }          // m = sum of parts
    int size() const { return static_cast<int>(parts_.size()); }  // |[p]|
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/**
 * Multiplicity vector [p]: part size -> number of occurrences in p.
 * Absent keys mean zero. length() is |[p]|, the number of parts.
 */
class MultiplicityVector {
public:
    MultiplicityVector() = default;
    explicit MultiplicityVector(const Partition& p);

    const std::map<int, int>& counts() const { return counts_; }
    int length() const { return length_; }

    /// [p]! = product over part sizes i of (multiplicity of i)!
    BigInt factorial() const;

    /// Inverse of multiplicity_vector: the partition this vector encodes.
    Partition to_partition() const;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

private:
    std::map<int, int> counts_;
    int length_ = 0;
};

/// All partitions of m, each exactly once, in reverse-lexicographic order:
/// the sequence starts at (m) and ends at (1,...,1); for m = 0 the single
/// empty partition. The order is deterministic and is the row order used
/// by every table export and identity sweep.
std::vector<Partition> enumerate_partitions(int m);

inline MultiplicityVector multiplicity_vector(const Partition& p) {
    return MultiplicityVector(p);
}

/// p! = product of the factorials of the parts; 1 for the empty partition.
BigInt factorial_product(const Partition& p);

/// [p]! as a free function, for formulas written in terms of p.
inline BigInt multiplicity_factorial(const Partition& p) {
    return MultiplicityVector(p).factorial();
}

/// Conjugate (Young-diagram transpose) partition; an involution.
Partition conjugate(const Partition& p);

/// Render as "(3,1)" / "()" for diagnostics and report witnesses.
std::string format_partition(const Partition& p);

}  // namespace npq
