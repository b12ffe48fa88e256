#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "legdet/detkit.hpp"
#include "legdet/lucas.hpp"
#include "legdet/modarith.hpp"
#include "legdet/scan.hpp"
#include "legdet/trinomial.hpp"
#include "legdet/verify.hpp"

namespace py = pybind11;
using namespace legdet;

namespace {

std::vector<std::uint32_t> to_ints(std::span<const FpElement> xs) {
    std::vector<std::uint32_t> out;
    out.reserve(xs.size());
    for (auto x : xs) out.push_back(x.value());
    return out;
}

std::vector<FpElement> to_elements(const std::vector<std::int64_t>& xs, std::uint32_t p) {
    std::vector<FpElement> out;
    for (auto x : xs) out.emplace_back(x, p);
    return out;
}

py::int_ to_python(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict record_dict(const VerificationRecord& r) {
    py::dict d;
    d["claim"] = std::string(claim_name(r.claim));
    d["p"] = r.p;
    d["b"] = r.params ? py::object(py::int_(r.params->first)) : py::object(py::none());
    d["c"] = r.params ? py::object(py::int_(r.params->second)) : py::object(py::none());
    d["expected"] = r.expected;
    d["observed"] = r.observed;
    d["status"] = std::string(status_name(r.status));
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_legdet, m) {
    m.doc() = "Determinants D_p(b,c) over F_p, trinomial coefficients and Lucas sequences";

    static py::exception<Error> error(m, "LegdetError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr e) {
        try {
            if (e) std::rethrow_exception(e);
        } catch (const Error& ex) {
            py::set_error(error, ex.what());
        }
    });

    m.def("is_odd_prime", &is_odd_prime, py::arg("n"));
    m.def("legendre", [](std::int64_t a, std::int64_t p) { return legendre(a, require_odd_prime(p)); },
          py::arg("a"), py::arg("p"));
    m.def("fermat_entry",
          [](std::int64_t a, std::int64_t p) { return fermat_entry(PrimeField(p)(a)).value(); },
          py::arg("a"), py::arg("p"));

    m.def("trinomial_row",
          [](std::uint32_t n, std::int64_t b, std::int64_t c, std::int64_t p) {
              return to_ints(trinomial_row(n, b, c, require_odd_prime(p)).coeffs());
          },
          py::arg("n"), py::arg("b"), py::arg("c"), py::arg("p"),
          "Coefficients <n,k> mod p for k = -n..n.");
    m.def("row_p_minus_1",
          [](std::int64_t b, std::int64_t c, std::int64_t p, const std::string& method) {
              const auto q = require_odd_prime(p);
              if (method == "lucas") return to_ints(row_p_minus_1_lucas(b, c, q).coeffs());
              if (method == "direct") return to_ints(row_p_minus_1_direct(b, c, q).coeffs());
              throw py::value_error("method must be 'lucas' or 'direct'");
          },
          py::arg("b"), py::arg("c"), py::arg("p"), py::arg("method") = "lucas");
    m.def("central_trinomial_mod_p2",
          [](std::int64_t p) { return central_trinomial_mod_p2(require_odd_prime(p)).value(); }, py::arg("p"));

    m.def("lucas_u_mod",
          [](std::uint64_t n, std::int64_t A, std::int64_t B, std::int64_t p) {
              return lucas_u_mod(n, {A, B}, require_odd_prime(p)).value();
          },
          py::arg("n"), py::arg("A"), py::arg("B"), py::arg("p"));
    m.def("lucas_u_exact",
          [](std::uint64_t n, std::int64_t A, std::int64_t B) { return to_python(lucas_u_exact(n, {A, B})); },
          py::arg("n"), py::arg("A"), py::arg("B"));
    m.def("closed_form_u_neg2_2", [](std::uint64_t k) { return to_python(closed_form_u_neg2_2(k)); },
          py::arg("k"));

    m.def("dp_matrix",
          [](std::int64_t p, std::int64_t b, std::int64_t c) {
              const auto mat = build_dp_matrix(require_odd_prime(p), b, c);
              std::vector<std::vector<std::uint32_t>> rows(mat.dim());
              for (std::size_t i = 0; i < mat.dim(); ++i)
                  for (std::size_t j = 0; j < mat.dim(); ++j) rows[i].push_back(mat.at(i, j).value());
              return rows;
          },
          py::arg("p"), py::arg("b"), py::arg("c"));
    m.def("det_mod_p",
          [](const std::vector<std::vector<std::int64_t>>& rows, std::int64_t p) {
              return det_mod_p(MatrixFp::from_rows(require_odd_prime(p), rows)).value();
          },
          py::arg("rows"), py::arg("p"));
    m.def("dp_det", [](std::int64_t p, std::int64_t b, std::int64_t c) {
              return compute_dp_det(require_odd_prime(p), b, c).value();
          },
          py::arg("p"), py::arg("b"), py::arg("c"), py::call_guard<py::gil_scoped_release>());
    m.def("dp_symbol", [](std::int64_t p, std::int64_t b, std::int64_t c) {
              return compute_dp_symbol(require_odd_prime(p), b, c);
          },
          py::arg("p"), py::arg("b"), py::arg("c"), py::call_guard<py::gil_scoped_release>());
    m.def("inv_count", [](std::int64_t p) { return inv_count(require_odd_prime(p)).count; }, py::arg("p"));
    m.def("krattenthaler_det",
          [](const std::vector<std::int64_t>& coeffs, const std::vector<std::int64_t>& xs,
             const std::vector<std::int64_t>& ys, std::int64_t p) {
              const auto q = require_odd_prime(p);
              return krattenthaler_det(to_elements(coeffs, q), to_elements(xs, q), to_elements(ys, q)).value();
          },
          py::arg("coeffs"), py::arg("xs"), py::arg("ys"), py::arg("p"));

    m.def("predict_d11", [](std::int64_t p) { return predict_d11(require_odd_prime(p)); }, py::arg("p"));
    m.def("predict_d22", [](std::int64_t p) { return predict_d22(require_odd_prime(p)); }, py::arg("p"));
    m.def("u_function",
          [](std::int64_t p, std::int64_t b, std::int64_t c) {
              const auto q = require_odd_prime(p);
              const auto u = u_function(q, b, c);
              std::vector<std::uint32_t> out;
              for (std::int64_t k = 0; k < std::int64_t(q); ++k) out.push_back(u.at(k).value());
              return out;
          },
          py::arg("p"), py::arg("b"), py::arg("c"), "U(k) mod p for k = 0..p-1.");

    m.def("claims", [] {
        std::vector<std::string> names;
        for (auto id : all_claims()) names.emplace_back(claim_name(id));
        return names;
    });
    m.def("primes", &primes_in_range, py::arg("pmin"), py::arg("pmax"));
    m.def("verify",
          [](const std::vector<std::string>& claims, std::int64_t pmin, std::int64_t pmax,
             std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> bc_grid, unsigned workers) {
              ScanConfig cfg;
              cfg.pmin = pmin;
              cfg.pmax = pmax;
              cfg.workers = workers;
              for (const auto& name : claims) {
                  if (name == "all") {
                      cfg.claims.assign(all_claims().begin(), all_claims().end());
                      continue;
                  }
                  auto id = parse_claim(name);
                  if (!id) throw py::value_error("unknown claim '" + name + "'");
                  cfg.claims.push_back(*id);
              }
              if (bc_grid) cfg.bc_grid = *bc_grid;
              std::vector<VerificationRecord> records;
              {
                  py::gil_scoped_release release;
                  records = run_scan(cfg);
              }
              py::list out;
              for (const auto& r : records) out.append(record_dict(r));
              return out;
          },
          py::arg("claims"), py::arg("pmin") = 3, py::arg("pmax") = 97, py::arg("bc_grid") = py::none(),
          py::arg("workers") = 1, "Run claim checks; returns one dict per record.");
}
