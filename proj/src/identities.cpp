#include "npq/identities.hpp"

#include <stdexcept>

namespace npq {

namespace {

const BigInt& table_entry(const CountTable& table, const Partition& p, const Partition& q) {
    auto it = table.find({p, q});
    if (it == table.end())
        throw std::out_of_range("count table has no entry for " + format_partition(p) + " x " +
                                format_partition(q));
    return it->second;
}

// x^(falling |[p]|) / [p]!, the per-partition weight in both identities.
UniPoly partition_weight_poly(const Partition& p) {
    const MultiplicityVector mult(p);
    return falling_factorial_poly(mult.length()).scaled(make_rational(1, mult.factorial()));
}

std::string sign_string(int m) { return m % 2 == 0 ? "1" : "-1"; }

}  // namespace

UniPoly prop1_first_lhs(const Partition& q, const CountTable& table) {
    const int m = q.weight();
    UniPoly acc;
    for (const Partition& p : enumerate_partitions(m))
        acc = acc + partition_weight_poly(p).scaled(BigRational(table_entry(table, p, q)));
    return acc;
}

BiPoly prop1_second_lhs(int m, const CountTable& table) {
    const auto partitions = enumerate_partitions(m);
    std::vector<UniPoly> weights;
    weights.reserve(partitions.size());
    for (const Partition& p : partitions) weights.push_back(partition_weight_poly(p));

    BiPoly acc;
    for (std::size_t a = 0; a < partitions.size(); ++a)
        for (std::size_t b = 0; b < partitions.size(); ++b) {
            const BigInt& n = table_entry(table, partitions[a], partitions[b]);
            if (n != 0)
                acc = acc + BiPoly::separable(weights[a], weights[b]).scaled(BigRational(n));
        }
    return acc;
}

std::vector<IdentityReport> verify_prop1_first(int m, const CountTable& table) {
    std::vector<IdentityReport> reports;
    for (const Partition& q : enumerate_partitions(m)) {
        const UniPoly lhs = prop1_first_lhs(q, table);
        const UniPoly rhs = falling_factorial_partition_poly(q).scaled(
            make_rational(1, factorial_product(q)));
        const bool degree_ok = lhs.degree().value_or(0) <= m && rhs.degree().value_or(0) <= m;
        reports.push_back({"prop1a", m, "q=" + format_partition(q), lhs.to_string(),
                           rhs.to_string(), lhs == rhs && degree_ok});
    }
    return reports;
}

IdentityReport verify_prop1_second(int m, const CountTable& table) {
    const BiPoly lhs = prop1_second_lhs(m, table);
    const BiPoly rhs = compose_xy(
        falling_factorial_poly(m).scaled(make_rational(1, factorial(static_cast<unsigned long>(m)))));
    bool degree_ok = true;
    for (const auto& [key, c] : lhs.terms())
        degree_ok = degree_ok && key.first <= m && key.second <= m;
    return {"prop1b", m, "all p,q of weight " + std::to_string(m), lhs.to_string(),
            rhs.to_string(), lhs == rhs && degree_ok};
}

std::vector<IdentityReport> verify_cor1(int m, const CountTable& table) {
    if (m < 1) throw std::invalid_argument("verify_cor1: m must be >= 1");
    const auto partitions = enumerate_partitions(m);

    // (-1)^{|[p]|} |[p]|! / [p]!, an exact integer.
    std::vector<BigInt> signed_multinomial;
    signed_multinomial.reserve(partitions.size());
    for (const Partition& p : partitions) {
        const MultiplicityVector mult(p);
        BigInt coeff = factorial(static_cast<unsigned long>(mult.length())) / mult.factorial();
        if (mult.length() % 2 != 0) coeff = -coeff;
        signed_multinomial.push_back(coeff);
    }

    std::vector<IdentityReport> reports;
    for (const Partition& q : enumerate_partitions(m)) {
        BigInt sum = 0;
        for (std::size_t a = 0; a < partitions.size(); ++a)
            sum += signed_multinomial[a] * table_entry(table, partitions[a], q);
        const BigInt expected = m % 2 == 0 ? 1 : -1;
        reports.push_back({"cor1", m, "q=" + format_partition(q), sum.get_str(), sign_string(m),
                           sum == expected});
    }

    BigInt double_sum = 0;
    for (std::size_t a = 0; a < partitions.size(); ++a)
        for (std::size_t b = 0; b < partitions.size(); ++b)
            double_sum += signed_multinomial[a] * signed_multinomial[b] *
                          table_entry(table, partitions[a], partitions[b]);
    const BigInt expected_double = m == 1 ? 1 : 0;
    reports.push_back({"cor1", m, "double sum over p,q", double_sum.get_str(),
                       expected_double.get_str(), double_sum == expected_double});
    return reports;
}

std::vector<IdentityReport> verify_cor2(int m, const CountTable& table) {
    if (m < 1) throw std::invalid_argument("verify_cor2: m must be >= 1");
    const auto partitions = enumerate_partitions(m);

    // inner[k][l] = sum over |[p]|=k, |[q]|=l of N(p,q) / ([p]! [q]!)
    std::vector<std::vector<BigRational>> inner(
        static_cast<std::size_t>(m) + 1,
        std::vector<BigRational>(static_cast<std::size_t>(m) + 1, BigRational(0)));
    for (const Partition& p : partitions) {
        const MultiplicityVector mp(p);
        for (const Partition& q : partitions) {
            const MultiplicityVector mq(q);
            inner[static_cast<std::size_t>(mp.length())][static_cast<std::size_t>(mq.length())] +=
                make_rational(table_entry(table, p, q), mp.factorial() * mq.factorial());
        }
    }

    // s(k,i) rows for k = 1..m.
    std::vector<std::vector<BigRational>> s_rows(static_cast<std::size_t>(m) + 1);
    for (int k = 1; k <= m; ++k) s_rows[static_cast<std::size_t>(k)] = stirling_first(k);

    const BiPoly bivariate = prop1_second_lhs(m, table);
    const BigInt m_factorial = factorial(static_cast<unsigned long>(m));

    std::vector<IdentityReport> reports;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            BigRational triple(0);
            for (int k = i; k <= m; ++k)
                for (int l = j; l <= m; ++l)
                    triple += s_rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                              s_rows[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] *
                              inner[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            const BigRational expected =
                i == j ? BigRational(s_rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)] /
                                     BigRational(m_factorial))
                       : BigRational(0);
            const bool matches_coefficient = triple == bivariate.coefficient(i, j);
            reports.push_back({"cor2", m,
                               "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")",
                               triple.get_str(), expected.get_str(),
                               triple == expected && matches_coefficient});
        }
    }
    return reports;
}

IdentityReport verify_stirling_bridge(int m, const CountTable& table) {
    if (m < 1) throw std::invalid_argument("verify_stirling_bridge: m must be >= 1");
    const Partition ones(std::vector<int>(static_cast<std::size_t>(m), 1));

    std::vector<BigRational> inner(static_cast<std::size_t>(m), BigRational(0));
    for (const Partition& p : enumerate_partitions(m)) {
        const MultiplicityVector mult(p);
        inner[static_cast<std::size_t>(mult.length()) - 1] +=
            make_rational(table_entry(table, p, ones), mult.factorial());
    }

    const std::vector<BigInt> stirling = stirling_second(m);
    bool pass = true;
    std::string lhs = "[", rhs = "[";
    for (int l = 1; l <= m; ++l) {
        if (l > 1) {
            lhs += ", ";
            rhs += ", ";
        }
        lhs += inner[static_cast<std::size_t>(l) - 1].get_str();
        rhs += stirling[static_cast<std::size_t>(l) - 1].get_str();
        pass = pass &&
               inner[static_cast<std::size_t>(l) - 1] ==
                   BigRational(stirling[static_cast<std::size_t>(l) - 1]);
    }
    lhs += ']';
    rhs += ']';

    // The defining relation itself, as polynomials.
    UniPoly combo;
    for (int l = 1; l <= m; ++l)
        combo = combo + falling_factorial_poly(l).scaled(
                            BigRational(stirling[static_cast<std::size_t>(l) - 1]));
    pass = pass && combo == UniPoly::monomial(m);

    return {"stirling", m, "q=" + format_partition(ones) + ", l=1.." + std::to_string(m), lhs,
            rhs, pass};
}

}  // namespace npq
