#include "npq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace npq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

MultiplicityVector::MultiplicityVector(const Partition& p) {
    for (int part : p.parts()) ++counts_[part];
    length_ = p.size();
}

BigInt MultiplicityVector::factorial() const {
    BigInt f = 1;
    for (const auto& [part, mult] : counts_)
        f *= npq::factorial(static_cast<unsigned long>(mult));
    return f;
}

Partition MultiplicityVector::to_partition() const {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(length_));
    for (auto it = counts_.rbegin(); it != counts_.rend(); ++it)
        parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int m) {
    if (m < 0) throw std::invalid_argument("enumerate_partitions: m must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    // Largest feasible part first at every level yields reverse-lexicographic order.
    std::function<void(int, int)> emit = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            emit(remaining - part, part);
            current.pop_back();
        }
    };
    emit(m, m == 0 ? 1 : m);
    return out;
}

BigInt factorial_product(const Partition& p) {
    BigInt f = 1;
    for (int part : p.parts()) f *= factorial(static_cast<unsigned long>(part));
    return f;
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    // Column j of the Young diagram has as many cells as there are parts >= j+1.
    std::vector<int> conj(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

std::string format_partition(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    s += ')';
    return s;
}

}  // namespace npq
