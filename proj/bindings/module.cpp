// Python bindings for the npq core. Exact integers cross as Python ints,
// exact rationals as fractions.Fraction, so nothing is rounded on the way
// into Python.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "npq/identities.hpp"
#include "npq/io.hpp"
#include "npq/matrix_count.hpp"
#include "npq/partition.hpp"
#include "npq/poly.hpp"
#include "npq/rm.hpp"
#include "npq/symmetric.hpp"

namespace py = pybind11;

namespace {

using namespace npq;

py::object big_to_int(const BigInt& value) {
  PyObject* raw = PyLong_FromString(value.get_str().c_str(), nullptr, 10);
  if (!raw) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(raw);
}

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

py::object rational_to_fraction(const BigRational& value) {
  return fraction_type()(to_string(value));
}

BigRational object_to_rational(const py::object& value) {
  const py::object fraction = fraction_type()(value);
  return parse_rational(py::cast<std::string>(py::str(fraction)));
}

Partition partition_from_sequence(const std::vector<int>& parts) {
  return Partition::from_unsorted(parts);
}

MuVector mu_from_sequence(const py::sequence& seq) {
  MuVector mu;
  for (const auto& item : seq) mu.push_back(object_to_rational(py::reinterpret_borrow<py::object>(item)));
  return mu;
}

py::tuple partition_to_tuple(const Partition& p) {
  py::tuple out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = p.part(i);
  return out;
}

py::dict report_to_dict(const IdentityReport& r) {
  py::dict d;
  d["identity"] = r.identity_id;
  d["m"] = r.m;
  d["witness"] = r.witness;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["pass"] = r.pass;
  return d;
}

py::list run_verify(const std::string& identity, int m_max) {
  py::list out;
  for (int m = 1; m <= m_max; ++m) {
    const CountTable table = full_table(m);
    std::vector<IdentityReport> reports;
    auto take = [&reports](std::vector<IdentityReport> batch) {
      for (auto& r : batch) reports.push_back(std::move(r));
    };
    if (identity == "prop1a" || identity == "all") take(verify_prop1_first(m, table));
    if (identity == "prop1b" || identity == "all")
      reports.push_back(verify_prop1_second(m, table));
    if (identity == "cor1" || identity == "all") take(verify_cor1(m, table));
    if (identity == "cor2" || identity == "all") take(verify_cor2(m, table));
    if (identity == "stirling" || identity == "all")
      reports.push_back(verify_stirling_bridge(m, table));
    for (const auto& r : reports) out.append(report_to_dict(r));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, module) {
  module.doc() =
      "exact counts of binary matrices with prescribed row/column sums, the "
      "polynomial identities they satisfy, and the alternating moment statistic";
  module.attr("__version__") = kVersion;

  module.def(
      "enumerate_partitions",
      [](int m) {
        py::list out;
        for (const Partition& p : enumerate_partitions(m)) out.append(partition_to_tuple(p));
        return out;
      },
      py::arg("m"), "All partitions of m in reverse-lexicographic order, as tuples.");

  module.def(
      "conjugate",
      [](const std::vector<int>& parts) {
        return partition_to_tuple(conjugate(partition_from_sequence(parts)));
      },
      py::arg("parts"), "Conjugate (transposed Young diagram) of a partition.");

  module.def(
      "multiplicity_vector",
      [](const std::vector<int>& parts) {
        py::dict out;
        const MultiplicityVector mv(partition_from_sequence(parts));
        for (const auto& [part, mult] : mv.counts()) out[py::int_(part)] = mult;
        return out;
      },
      py::arg("parts"), "Map part value -> multiplicity.");

  module.def(
      "factorial_product",
      [](const std::vector<int>& parts) {
        return big_to_int(factorial_product(partition_from_sequence(parts)));
      },
      py::arg("parts"), "Product of the factorials of the parts.");

  module.def(
      "multiplicity_factorial",
      [](const std::vector<int>& parts) {
        return big_to_int(multiplicity_factorial(partition_from_sequence(parts)));
      },
      py::arg("parts"), "Product of the factorials of the multiplicities.");

  module.def(
      "count",
      [](const std::vector<int>& rows, const std::vector<int>& cols) {
        return big_to_int(count(partition_from_sequence(rows), partition_from_sequence(cols)));
      },
      py::arg("rows"), py::arg("cols"),
      "Number of binary matrices with the given row and column sums.");

  module.def(
      "count_bruteforce",
      [](const std::vector<int>& rows, const std::vector<int>& cols) {
        return big_to_int(
            count_bruteforce(partition_from_sequence(rows), partition_from_sequence(cols)));
      },
      py::arg("rows"), py::arg("cols"),
      "Same count by exhaustive enumeration (small inputs only).");

  module.def(
      "full_table",
      [](int m) {
        py::dict out;
        for (const auto& [key, value] : full_table(m)) {
          out[py::make_tuple(partition_to_tuple(key.first), partition_to_tuple(key.second))] =
              big_to_int(value);
        }
        return out;
      },
      py::arg("m"), "All counts for margins of weight m, keyed by (p, q).");

  module.def(
      "stirling_first",
      [](int m) {
        py::list out;
        for (const BigRational& c : stirling_first(m)) {
          BigRational copy = c;
          out.append(big_to_int(copy.get_num()));
        }
        return out;
      },
      py::arg("m"),
      "Coefficients of the degree-m falling factorial; entry i is the signed "
      "Stirling number s(m, i).");

  module.def(
      "stirling_second",
      [](int m) {
        py::list out;
        for (const BigInt& v : stirling_second(m)) out.append(big_to_int(v));
        return out;
      },
      py::arg("m"), "Row S(m, 1..m) of Stirling numbers of the second kind.");

  module.def(
      "double_factorial_odd", [](int k) { return big_to_int(double_factorial_odd(k)); },
      py::arg("k"), "(2k-1)!!, the 2k-th moment of a standard Gaussian.");

  module.def(
      "elementary_symmetric",
      [](const std::vector<int>& parts, const py::sequence& mu) {
        return rational_to_fraction(
            elementary_symmetric(partition_from_sequence(parts), mu_from_sequence(mu)));
      },
      py::arg("parts"), py::arg("mu"),
      "Product of elementary symmetric polynomials e_p at the point mu.");

  module.def(
      "monomial_symmetric",
      [](const std::vector<int>& parts, const py::sequence& mu) {
        return rational_to_fraction(
            monomial_symmetric(partition_from_sequence(parts), mu_from_sequence(mu)));
      },
      py::arg("parts"), py::arg("mu"), "Monomial symmetric polynomial m_q at the point mu.");

  module.def(
      "rm_direct",
      [](int m, const py::sequence& mu) {
        return rational_to_fraction(rm_direct(m, mu_from_sequence(mu)));
      },
      py::arg("m"), py::arg("mu"),
      "Alternating partition sum for the moment statistic R_m.");

  module.def(
      "rm_exact_moment",
      [](int m, const py::sequence& mu) {
        return rational_to_fraction(rm_exact_moment(m, mu_from_sequence(mu)));
      },
      py::arg("m"), py::arg("mu"),
      "Same statistic through the exact Gaussian-moment formula.");

  module.def(
      "rm_monte_carlo",
      [](int m, const py::sequence& mu, std::uint64_t samples, std::uint64_t seed) {
        const McEstimate e = rm_monte_carlo(m, mu_from_sequence(mu), samples, seed);
        return py::make_tuple(e.estimate, e.std_error);
      },
      py::arg("m"), py::arg("mu"), py::arg("samples"), py::arg("seed"),
      "(estimate, standard error) for the Monte Carlo route; deterministic per seed.");

  module.def("verify", &run_verify, py::arg("identity"), py::arg("m_max"),
             "Run one identity sweep ('prop1a', 'prop1b', 'cor1', 'cor2', 'stirling', or "
             "'all') for every weight up to m_max; returns one dict per check.");

  module.def(
      "verify_e2m",
      [](int m, const py::sequence& mu) {
        py::list out;
        const CountTable table = full_table(m);
        for (const auto& r : verify_e_to_m_expansion(m, mu_from_sequence(mu), table))
          out.append(report_to_dict(r));
        return out;
      },
      py::arg("m"), py::arg("mu"),
      "Check e_p == sum_q N(p,q) m_q at the point mu for every p of weight m.");
}
