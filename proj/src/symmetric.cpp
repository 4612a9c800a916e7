#include "npq/symmetric.hpp"

#include <functional>
#include <stdexcept>

namespace npq {

std::vector<BigRational> elementary_symmetric_row(const MuVector& mu, int r_max) {
    if (mu.empty()) throw std::invalid_argument("weight vector must be non-empty");
    if (r_max < 0) throw std::invalid_argument("r_max must be >= 0");
    // Coefficients of prod_i (1 + mu_i t), truncated at degree r_max.
    std::vector<BigRational> e(static_cast<std::size_t>(r_max) + 1, BigRational(0));
    e[0] = 1;
    int filled = 0;
    for (const BigRational& w : mu) {
        filled = std::min(filled + 1, r_max);
        for (int r = filled; r >= 1; --r)
            e[static_cast<std::size_t>(r)] += w * e[static_cast<std::size_t>(r) - 1];
    }
    return e;
}

BigRational elementary_symmetric(const Partition& p, const MuVector& mu) {
    if (mu.empty()) throw std::invalid_argument("weight vector must be non-empty");
    if (p.empty()) return BigRational(1);
    const int k = static_cast<int>(mu.size());
    if (p.part(0) > k) return BigRational(0);  // e_r vanishes for r > k
    const auto e = elementary_symmetric_row(mu, p.part(0));
    BigRational acc(1);
    for (int part : p.parts()) acc *= e[static_cast<std::size_t>(part)];
    return acc;
}

BigRational monomial_symmetric(const Partition& q, const MuVector& mu) {
    if (mu.empty()) throw std::invalid_argument("weight vector must be non-empty");
    const int k = static_cast<int>(mu.size());
    if (q.empty()) return BigRational(1);
    if (q.size() > k) return BigRational(0);

    // Distinct exponents with multiplicities, largest exponent first.
    const MultiplicityVector mult(q);
    std::vector<std::pair<int, int>> groups(mult.counts().rbegin(), mult.counts().rend());

    // Powers mu_i^v for each needed exponent v.
    std::vector<std::vector<BigRational>> powers(groups.size(),
                                                 std::vector<BigRational>(mu.size()));
    for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t i = 0; i < mu.size(); ++i)
            powers[g][i] = pow_rational(mu[i], static_cast<unsigned long>(groups[g].first));

    // Assign each exponent group a set of distinct variable indices.
    BigRational total(0);
    std::vector<bool> used(mu.size(), false);
    std::function<void(std::size_t, const BigRational&)> assign_group =
        [&](std::size_t g, const BigRational& product) {
            if (g == groups.size()) {
                total += product;
                return;
            }
            const int need = groups[g].second;
            std::function<void(int, int, const BigRational&)> choose =
                [&](int from, int left, const BigRational& partial) {
                    if (left == 0) {
                        assign_group(g + 1, partial);
                        return;
                    }
                    for (int i = from; i <= k - left; ++i) {
                        if (used[static_cast<std::size_t>(i)]) continue;
                        used[static_cast<std::size_t>(i)] = true;
                        choose(i + 1, left - 1,
                               partial * powers[g][static_cast<std::size_t>(i)]);
                        used[static_cast<std::size_t>(i)] = false;
                    }
                };
            choose(0, need, product);
        };
    assign_group(0, BigRational(1));
    return total;
}

std::vector<IdentityReport> verify_e_to_m_expansion(int m, const MuVector& mu,
                                                    const CountTable& table) {
    const auto partitions = enumerate_partitions(m);
    std::vector<BigRational> monomials;
    monomials.reserve(partitions.size());
    for (const Partition& q : partitions) monomials.push_back(monomial_symmetric(q, mu));

    std::vector<IdentityReport> reports;
    for (const Partition& p : partitions) {
        const BigRational lhs = elementary_symmetric(p, mu);
        BigRational rhs(0);
        for (std::size_t b = 0; b < partitions.size(); ++b) {
            auto it = table.find({p, partitions[b]});
            if (it == table.end())
                throw std::out_of_range("count table has no entry for " + format_partition(p) +
                                        " x " + format_partition(partitions[b]));
            rhs += BigRational(it->second) * monomials[b];
        }
        reports.push_back({"e2m", m, "p=" + format_partition(p), lhs.get_str(), rhs.get_str(),
                           lhs == rhs});
    }
    return reports;
}

}  // namespace npq
