#include "npq/matrix_count.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace npq {

bool gale_ryser_feasible(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight()) return false;
    const Partition conj = conjugate(p);
    long q_prefix = 0, conj_prefix = 0;
    for (int j = 0; j < q.size(); ++j) {
        q_prefix += q.part(j);
        if (j < conj.size()) conj_prefix += conj.part(j);
        if (q_prefix > conj_prefix) return false;
    }
    return true;
}

BigInt count_bruteforce(const Partition& p, const Partition& q) {
    if (p.weight() != q.weight())
        throw std::invalid_argument("count_bruteforce: row and column sums must agree");
    const int m = p.weight();
    if (m == 0) return 1;

    const int rows = p.size(), cols = q.size();
    const int cells = rows * cols;
    if (m > cells) return 0;

    // Walk every m-subset of the grid cells.
    std::vector<int> chosen(static_cast<std::size_t>(m));
    std::iota(chosen.begin(), chosen.end(), 0);
    std::vector<int> row_sum(static_cast<std::size_t>(rows));
    std::vector<int> col_sum(static_cast<std::size_t>(cols));

    unsigned long matches = 0;
    for (;;) {
        std::fill(row_sum.begin(), row_sum.end(), 0);
        std::fill(col_sum.begin(), col_sum.end(), 0);
        for (int cell : chosen) {
            ++row_sum[static_cast<std::size_t>(cell / cols)];
            ++col_sum[static_cast<std::size_t>(cell % cols)];
        }
        bool ok = true;
        for (int i = 0; ok && i < rows; ++i) ok = row_sum[static_cast<std::size_t>(i)] == p.part(i);
        for (int j = 0; ok && j < cols; ++j) ok = col_sum[static_cast<std::size_t>(j)] == q.part(j);
        if (ok) ++matches;

        // Next combination in lexicographic order.
        int i = m - 1;
        while (i >= 0 && chosen[static_cast<std::size_t>(i)] == cells - m + i) --i;
        if (i < 0) break;
        ++chosen[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
    }
    return BigInt(matches);
}

namespace {

// Rows grouped by current sum value: (value, how many rows hold it), descending.
std::vector<std::pair<int, int>> row_groups(const Partition& p) {
    std::vector<std::pair<int, int>> groups;
    for (int part : p.parts()) {
        if (!groups.empty() && groups.back().first == part)
            ++groups.back().second;
        else
            groups.emplace_back(part, 1);
    }
    return groups;
}

BigInt count_rec(const Partition& rows, const Partition& cols, CountTable& table) {
    if (cols.empty()) return rows.empty() ? BigInt(1) : BigInt(0);
    if (!gale_ryser_feasible(rows, cols)) return 0;

    const CountKey key{rows, cols};
    if (auto it = table.find(key); it != table.end()) return it->second;

    const int col = cols.part(0);
    const Partition cols_rest(
        std::vector<int>(cols.parts().begin() + 1, cols.parts().end()));
    const auto groups = row_groups(rows);

    BigInt total = 0;
    std::vector<int> taken(groups.size(), 0);
    // Distribute the `col` ones of the removed column over the row groups.
    std::function<void(std::size_t, int, const BigInt&)> distribute =
        [&](std::size_t g, int remaining, const BigInt& ways) {
            if (remaining == 0) {
                std::vector<int> reduced;
                reduced.reserve(rows.parts().size());
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    const auto [value, mult] = groups[i];
                    for (int r = 0; r < mult - taken[i]; ++r) reduced.push_back(value);
                    if (value > 1)
                        for (int r = 0; r < taken[i]; ++r) reduced.push_back(value - 1);
                }
                std::sort(reduced.begin(), reduced.end(), std::greater<int>());
                total += ways * count_rec(Partition(std::move(reduced)), cols_rest, table);
                return;
            }
            if (g == groups.size()) return;
            const auto [value, mult] = groups[g];
            for (int j = std::min(mult, remaining); j >= 0; --j) {
                taken[g] = j;
                distribute(g + 1, remaining - j,
                           ways * binomial(static_cast<unsigned long>(mult),
                                           static_cast<unsigned long>(j)));
            }
            taken[g] = 0;
        };
    distribute(0, col, BigInt(1));

    table.emplace(key, total);
    return total;
}

}  // namespace

BigInt count(const Partition& p, const Partition& q, CountTable& table) {
    if (p.weight() != q.weight())
        throw std::invalid_argument("count: row and column sums must agree");
    return count_rec(p, q, table);
}

BigInt count(const Partition& p, const Partition& q) {
    CountTable table;
    return count(p, q, table);
}

CountTable full_table(int m) {
    const auto partitions = enumerate_partitions(m);
    CountTable memo;
    CountTable result;
    for (std::size_t a = 0; a < partitions.size(); ++a) {
        for (std::size_t b = a; b < partitions.size(); ++b) {
            const BigInt n = count(partitions[a], partitions[b], memo);
            result[{partitions[a], partitions[b]}] = n;
            result[{partitions[b], partitions[a]}] = n;  // transpose symmetry
        }
    }
    return result;
}

}  // namespace npq
