#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hmom/akl.hpp"
#include "hmom/cli.hpp"
#include "hmom/hermite.hpp"
#include "hmom/lattice.hpp"
#include "hmom/moments.hpp"
#include "hmom/series_analysis.hpp"
#include "hmom/spectra.hpp"
#include "hmom/verify.hpp"
#include "hmom/wigner.hpp"

namespace py = pybind11;
using namespace hmom;

namespace {

py::object to_py_int(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

py::object to_py_fraction(const BigRat& v) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(boost::multiprecision::numerator(v)), to_py_int(boost::multiprecision::denominator(v)));
}

/// Accepts int or fractions.Fraction (anything with numerator/denominator).
BigRat rational_from(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return BigRat(BigInt(py::str(obj).cast<std::string>()));
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        const BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
        const BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
        return rat(num, den);
    }
    throw usage_error("expected an int or fractions.Fraction");
}

py::list int_coeffs(const ExactPolynomial& p) {
    py::list out;
    for (int j = 0; j <= p.degree(); ++j) out.append(to_py_int(p.coeff(j)));
    if (p.is_zero()) out.append(to_py_int(BigInt(0)));
    return out;
}

py::list int_series(const TruncatedSeries& s) {
    py::list out;
    for (int k = 0; k <= s.order(); ++k) {
        const BigRat& c = s.coeff(k);
        if (boost::multiprecision::denominator(c) != 1)
            throw consistency_error("series coefficient is not an integer");
        out.append(to_py_int(boost::multiprecision::numerator(c)));
    }
    return out;
}

EnsembleConfig make_config(int n, const std::string& dist, double c, long samples, std::uint64_t seed) {
    EnsembleConfig cfg;
    cfg.n = n;
    cfg.dist = entry_law_from_string(dist);
    cfg.c = c;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Power sums of Hermite roots, Catalan coefficients and Wigner-matrix checks";
    m.attr("__version__") = kToolVersion;

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<consistency_error>(m, "ConsistencyError", PyExc_RuntimeError);

    // hermite
    m.def(
        "hermite_coefficients", [](int n) { return int_coeffs(hermite_monic(n).h); }, py::arg("n"),
        "Coefficients of the monic Hermite polynomial H_n, lowest power first.");
    m.def(
        "hermite_coeff_closed", [](int n, int k) { return to_py_int(hermite_coeff_closed(n, k)); }, py::arg("n"),
        py::arg("k"), "Closed-form coefficient of x^(n-k) in H_n.");
    m.def(
        "matching_count_complete", [](int n, int k) { return to_py_int(matching_count_complete(n, k)); }, py::arg("n"),
        py::arg("k"), "Number of k-edge matchings of the complete graph K_n.");
    m.def("conjugate_recursion_check", &conjugate_recursion_check, py::arg("n"));

    // moments
    m.def(
        "power_sums",
        [](int n, int kmax) {
            py::list out;
            for (const auto& v : power_sums_exact(n, kmax)) out.append(to_py_int(v));
            return out;
        },
        py::arg("n"), py::arg("kmax"), "Exact power sums M_n(1)..M_n(kmax) of the roots of H_n.");
    m.def(
        "moment_polynomial",
        [](int k) {
            const MomentPolynomial mp = moment_polynomial(k);
            py::dict d;
            d["k"] = mp.k;
            d["coeffs"] = int_coeffs(mp.poly);
            d["leading"] = to_py_int(mp.leading);
            d["second"] = to_py_int(mp.second);
            return d;
        },
        py::arg("k"), "M_n(2k) as an exact polynomial in n (coefficients lowest power first).");
    m.def(
        "moment_determinant", [](int k) { return int_coeffs(moment_determinant(k)); }, py::arg("k"));
    m.def(
        "coefficient_targets",
        [](int k) {
            const auto [c, s] = coefficient_targets(k);
            return py::make_tuple(to_py_int(c), to_py_int(s));
        },
        py::arg("k"), "(C_k, s_k): expected leading and second coefficients of M_n(2k).");

    // akl
    m.def(
        "akl", [](int k, int l) { return int_coeffs(akl_poly(k, l)); }, py::arg("k"), py::arg("l"));
    m.def(
        "falling_factorial", [](int l) { return int_coeffs(falling_factorial(l)); }, py::arg("l"));

    // lattice
    m.def(
        "count_paths", [](int k) { return to_py_int(count_paths(k)); }, py::arg("k"));
    m.def(
        "lattice_paths",
        [](int k, bool weights) {
            py::list out;
            for (const auto& p : enumerate_paths(k, weights)) {
                py::dict d;
                d["nodes"] = p.nodes;
                if (weights) d["weight"] = int_coeffs(p.weight);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("k"), py::arg("weights") = false);
    m.def(
        "reconstruct_A", [](int k) { return int_coeffs(reconstruct_A(k)); }, py::arg("k"));
    m.def(
        "second_coeffs",
        [](int kmax) {
            py::list out;
            for (const auto& v : second_coeff_recursion(kmax)) out.append(to_py_int(v));
            return out;
        },
        py::arg("kmax"), "s_0..s_kmax from the lattice recursion.");
    m.def("catalan_recursion_check", &catalan_recursion_check, py::arg("kmax"));
    m.def("walk_identity_check", &walk_identity_check, py::arg("k"));

    // series analysis
    m.def(
        "catalan_numbers", [](int K) { return int_series(catalan_series(K)); }, py::arg("kmax"), "C_0..C_kmax.");
    m.def(
        "moment_series", [](int n, int K) { return int_series(moment_series(n, K)); }, py::arg("n"), py::arg("order"));
    m.def(
        "second_coeff_series", [](int K) { return int_series(second_coeff_series(K)); }, py::arg("order"));
    m.def(
        "f_n", [](int n, const py::object& z) { return to_py_fraction(f_n_eval(n, rational_from(z))); }, py::arg("n"),
        py::arg("z"), "Exact rational value of Hhat_{n-1}(z/sqrt n)/Hhat_n(z/sqrt n).");
    m.def(
        "fixed_point_residual",
        [](int n, const py::object& z) { return to_py_fraction(fixed_point_residual(n, rational_from(z))); },
        py::arg("n"), py::arg("z"));
    m.def(
        "bound_check", [](int n, const py::object& z) { return bound_check(n, rational_from(z)); }, py::arg("n"),
        py::arg("z"));

    // spectra
    m.def(
        "hermite_roots",
        [](int n) {
            const RootSet rs = hermite_roots(n);
            py::dict d;
            d["roots"] = rs.roots;
            d["scaled"] = rs.scaled;
            return d;
        },
        py::arg("n"));
    m.def(
        "empirical_moment", [](int n, int k) { return empirical_moment(hermite_roots(n), k); }, py::arg("n"),
        py::arg("k"), "(1/n) sum of lambda_j^k over the scaled roots of H_n.");
    m.def(
        "semicircle_moment", [](int k) { return to_py_fraction(semicircle_moment(k)); }, py::arg("k"));
    m.def("semicircle_density", &semicircle_density, py::arg("x"));
    m.def("semicircle_cdf", &semicircle_cdf, py::arg("x"));
    m.def("symmetric_eigenvalues", &symmetric_eigenvalues, py::arg("matrix"));

    // wigner
    m.def(
        "sample_matrix",
        [](int n, const std::string& dist, double c, std::uint64_t seed, std::uint64_t stream) {
            return sample_matrix(make_config(n, dist, c, 1, seed), stream);
        },
        py::arg("n"), py::arg("dist"), py::arg("c"), py::arg("seed"), py::arg("stream") = 0);
    m.def("char_poly", &char_poly, py::arg("matrix"), "Monic characteristic polynomial, lowest power first.");
    m.def(
        "exact_expected_charpoly",
        [](int n) {
            py::list out;
            for (const auto& v : exact_expected_charpoly(n)) out.append(to_py_int(v));
            return out;
        },
        py::arg("n"));
    m.def(
        "mc_expected_charpoly",
        [](int n, const std::string& dist, double c, long samples, std::uint64_t seed, int threads) {
            const CharPolyStats st = mc_expected_charpoly(make_config(n, dist, c, samples, seed), threads);
            py::list coeffs;
            for (const auto& cs : st.coeffs) {
                py::dict d;
                d["k"] = cs.k;
                d["mean"] = cs.mean;
                d["stderr"] = cs.stderr_of_mean;
                d["target"] = cs.target;
                coeffs.append(std::move(d));
            }
            py::dict out;
            out["n"] = st.n;
            out["samples"] = st.samples;
            out["coefficients"] = std::move(coeffs);
            return out;
        },
        py::arg("n"), py::arg("dist") = "rademacher", py::arg("c") = 1.0, py::arg("samples") = 10000,
        py::arg("seed") = 1, py::arg("threads") = 1);
    m.def(
        "spectrum_histogram",
        [](int n, const std::string& dist, double c, long samples, std::uint64_t seed, int bins, int threads) {
            const SpectrumHistogram h = spectrum_histogram(make_config(n, dist, c, samples, seed), bins, threads);
            py::dict out;
            out["edges"] = h.edges;
            out["masses"] = h.masses;
            out["semicircle"] = h.reference;
            out["tv_distance"] = h.tv_distance;
            out["out_of_range"] = h.out_of_range;
            return out;
        },
        py::arg("n"), py::arg("dist") = "gaussian", py::arg("c") = 1.0, py::arg("samples") = 100, py::arg("seed") = 2,
        py::arg("bins") = 24, py::arg("threads") = 1);

    // verification
    m.def(
        "verify_all",
        [](int threads) {
            py::list out;
            for (const auto& r : run_verification(threads)) {
                py::dict d;
                d["id"] = r.id;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("threads") = 1, "Run the full cross-route verification suite.");
}
