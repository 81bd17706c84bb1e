#include "hmom/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmom/akl.hpp"
#include "hmom/hermite.hpp"
#include "hmom/lattice.hpp"
#include "hmom/moments.hpp"
#include "hmom/series_analysis.hpp"
#include "hmom/spectra.hpp"
#include "hmom/verify.hpp"
#include "hmom/wigner.hpp"

namespace hmom {

namespace {

using nlohmann::json;

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setfill('0') << std::setw(16) << h;
    return os.str();
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int default_threads() {
    if (const char* env = std::getenv("HMOM_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Coefficients high-to-low, comma separated: "5,-22,32,-15,0".
std::string coeff_line(const ExactPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int j = p.degree(); j >= 0; --j) {
        if (!s.empty()) s += ",";
        s += p.coeff(j).str();
    }
    return s;
}

std::vector<std::string> coeff_strings(const ExactPolynomial& p) {
    std::vector<std::string> out;
    for (int j = p.degree(); j >= 0; --j) out.push_back(p.coeff(j).str());
    if (out.empty()) out.push_back("0");
    return out;
}

struct OutputSink {
    std::string format = "plain";  // plain|csv|json
    std::string out_path;
    std::string manifest_path;
    std::ostringstream buffer;

    void add_options(CLI::App* cmd, bool with_format = true) {
        if (with_format)
            cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"plain", "csv", "json"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        cmd->add_option("--manifest", manifest_path, "write a JSON run manifest to this path");
    }

    /// Writes the buffered output and the optional manifest; the manifest
    /// records the full parameter set and a checksum of the bytes written.
    void finish(const std::string& subcommand, const json& params, std::ostream& fallback) {
        const std::string bytes = buffer.str();
        if (out_path.empty()) {
            fallback << bytes;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw usage_error("cannot open output file '" + out_path + "'");
            f << bytes;
        }
        if (!manifest_path.empty()) {
            json manifest;
            manifest["subcommand"] = subcommand;
            manifest["version"] = kToolVersion;
            manifest["parameters"] = params;
            manifest["seed"] = params.contains("seed") ? params["seed"] : json(nullptr);
            manifest["output_checksum"] = "fnv1a64:" + fnv1a64_hex(bytes);
            std::ofstream f(manifest_path);
            if (!f) throw usage_error("cannot open manifest file '" + manifest_path + "'");
            f << manifest.dump(2) << "\n";
        }
    }
};

// ---------------------------------------------------------------------------
// subcommand runners

void run_hermite(int n, OutputSink& sink) {
    const HermitePair hp = hermite_monic(n);
    std::ostream& os = sink.buffer;
    if (sink.format == "json") {
        json j;
        j["n"] = n;
        j["coefficients"] = json::array();
        for (int k = 0; k <= n; ++k) j["coefficients"].push_back({{"k", k}, {"a", hp.h.coeff(n - k).str()}});
        os << j.dump(2) << "\n";
    } else if (sink.format == "csv") {
        os << "k,a\n";
        for (int k = 0; k <= n; ++k) os << k << "," << hp.h.coeff(n - k).str() << "\n";
    } else {
        os << coeff_line(hp.h) << "\n";
    }
}

void run_moments(int k, const std::string& route, long eval_n, bool has_eval, OutputSink& sink) {
    ExactPolynomial poly('n');
    if (route == "interp")
        poly = moment_polynomial(k).poly;
    else if (route == "det")
        poly = moment_determinant(k);
    else
        poly = akl_poly(k, 1).with_var('n');
    const auto [catalan_k, s_k] = coefficient_targets(k);

    BigInt value;
    if (has_eval) {
        if (eval_n < 0) throw usage_error("moments: --eval-n must be nonnegative");
        const BigRat v = eval_rational(poly, BigRat(eval_n));
        value = boost::multiprecision::numerator(v);
    }

    std::ostream& os = sink.buffer;
    if (sink.format == "json") {
        json j;
        j["k"] = k;
        j["route"] = route;
        j["coefficients"] = coeff_strings(poly);
        j["leading"] = poly.coeff(k + 1).str();
        j["second"] = poly.coeff(k).str();
        j["catalan"] = catalan_k.str();
        j["s_k"] = s_k.str();
        if (has_eval) {
            j["eval_n"] = eval_n;
            j["value"] = value.str();
        }
        os << j.dump(2) << "\n";
    } else if (sink.format == "csv") {
        os << "power,coefficient,target\n";
        for (int j = poly.degree(); j >= 0; --j) {
            os << j << "," << poly.coeff(j).str() << ",";
            if (j == k + 1)
                os << catalan_k.str();
            else if (j == k)
                os << s_k.str();
            os << "\n";
        }
        if (has_eval) os << "\nn,value\n" << eval_n << "," << value.str() << "\n";
    } else {
        os << coeff_line(poly) << "\n";
        if (has_eval) os << value.str() << "\n";
    }
}

void run_akl(int k, int l, OutputSink& sink) {
    const ExactPolynomial poly = akl_poly(k, l);
    std::ostream& os = sink.buffer;
    if (sink.format == "json") {
        json j;
        j["k"] = k;
        j["l"] = l;
        j["coefficients"] = coeff_strings(poly);
        os << j.dump(2) << "\n";
    } else if (sink.format == "csv") {
        os << "power,coefficient\n";
        for (int j = poly.degree(); j >= 0; --j) os << j << "," << poly.coeff(j).str() << "\n";
    } else {
        os << coeff_line(poly) << "\n";
    }
}

std::string path_text(const LatticePath& p) {
    std::string s;
    for (const auto& [i, j] : p.nodes) {
        if (!s.empty()) s += "->";
        s += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
    }
    return s;
}

void run_paths(int k, bool weights, bool count_only, OutputSink& sink) {
    std::ostream& os = sink.buffer;
    if (count_only) {
        const BigInt count = count_paths(k);
        if (sink.format == "json") {
            json j;
            j["k"] = k;
            j["count"] = count.str();
            os << j.dump(2) << "\n";
        } else {
            os << count.str() << "\n";
        }
        return;
    }
    const auto paths = enumerate_paths(k, weights);
    if (sink.format == "json") {
        json j;
        j["k"] = k;
        j["count"] = std::to_string(paths.size());
        j["paths"] = json::array();
        for (const auto& p : paths) {
            json jp;
            jp["nodes"] = json::array();
            for (const auto& [i, h] : p.nodes) jp["nodes"].push_back({i, h});
            if (weights) jp["weight"] = coeff_strings(p.weight);
            j["paths"].push_back(std::move(jp));
        }
        os << j.dump(2) << "\n";
    } else if (sink.format == "csv") {
        os << (weights ? "path,weight\n" : "path\n");
        for (const auto& p : paths) {
            os << path_text(p);
            if (weights) {
                std::string w;
                for (int j = p.weight.degree(); j >= 0; --j) {
                    if (!w.empty()) w += " ";
                    w += p.weight.coeff(j).str();
                }
                os << "," << w;
            }
            os << "\n";
        }
    } else {
        for (const auto& p : paths) {
            os << path_text(p);
            if (weights) os << " | " << to_string(p.weight);
            os << "\n";
        }
    }
}

void run_gf_check(int n_max, int grid, int threads, OutputSink& sink) {
    if (grid < 1) throw usage_error("gf-check: need --grid >= 1");
    std::vector<BigRat> zs;
    for (int i = 1; i <= grid; ++i) zs.push_back(BigRat(i, 3 * grid));
    const auto points = gf_grid(n_max, zs, threads);
    std::ostream& os = sink.buffer;
    if (sink.format == "json") {
        json j = json::array();
        for (const auto& p : points)
            j.push_back({{"n", p.n},
                         {"z", to_string(p.z)},
                         {"f_n", to_string(p.f)},
                         {"bound_ok", p.bound_ok},
                         {"residual_zero", p.residual_zero}});
        os << j.dump(2) << "\n";
    } else {
        os << "n,z,f_n,bound_ok,residual_zero\n";
        for (const auto& p : points)
            os << p.n << "," << to_string(p.z) << "," << to_string(p.f) << "," << (p.bound_ok ? "true" : "false")
               << "," << (p.residual_zero ? "true" : "false") << "\n";
    }
}

void run_roots(int n, int moments_kmax, OutputSink& sink) {
    const RootSet rs = hermite_roots(n);
    std::ostream& os = sink.buffer;
    if (sink.format == "json") {
        json j;
        j["n"] = n;
        j["roots"] = rs.roots;
        j["scaled"] = rs.scaled;
        if (moments_kmax >= 0) {
            j["moments"] = json::array();
            for (int k = 0; k <= moments_kmax; ++k)
                j["moments"].push_back({{"k", k},
                                        {"empirical", empirical_moment(rs, k)},
                                        {"semicircle", to_string(semicircle_moment(k))}});
        }
        os << j.dump(2) << "\n";
    } else {
        os << "j,root,scaled\n";
        for (int j = 0; j < n; ++j)
            os << j + 1 << "," << format_double(rs.roots[j]) << "," << format_double(rs.scaled[j]) << "\n";
        if (moments_kmax >= 0) {
            os << "\nk,empirical,semicircle\n";
            for (int k = 0; k <= moments_kmax; ++k)
                os << k << "," << format_double(empirical_moment(rs, k)) << "," << to_string(semicircle_moment(k))
                   << "\n";
        }
    }
}

void run_wigner_mc(const EnsembleConfig& cfg, int hist_bins, int threads, OutputSink& sink) {
    const CharPolyStats stats = mc_expected_charpoly(cfg, threads);
    json j;
    j["n"] = cfg.n;
    j["dist"] = to_string(cfg.dist);
    j["c"] = cfg.c;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["coefficients"] = json::array();
    for (const auto& cs : stats.coeffs)
        j["coefficients"].push_back(
            {{"k", cs.k}, {"mean", cs.mean}, {"stderr", cs.stderr_of_mean}, {"target", cs.target}});
    if (hist_bins > 0) {
        const SpectrumHistogram h = spectrum_histogram(cfg, hist_bins, threads);
        j["histogram"] = {{"edges", h.edges},
                          {"masses", h.masses},
                          {"semicircle", h.reference},
                          {"tv_distance", h.tv_distance},
                          {"out_of_range", h.out_of_range}};
    }
    sink.buffer << j.dump(2) << "\n";
}

int run_verify_all(int threads, OutputSink& sink) {
    const auto results = run_verification(threads);
    int failures = 0;
    if (sink.format == "json") {
        json j = json::array();
        for (const auto& r : results) {
            j.push_back({{"id", r.id},
                         {"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"seconds", r.seconds},
                         {"budget_seconds", r.budget_seconds}});
            if (!r.pass) ++failures;
        }
        sink.buffer << j.dump(2) << "\n";
    } else {
        failures = print_verification(results, sink.buffer);
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("hmom");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"power sums of Hermite roots, Catalan coefficients and Wigner-matrix checks"};
    app.set_version_flag("--version", std::string("hmom ") + kToolVersion);
    app.require_subcommand(1);

    int threads = default_threads();

    // hermite
    auto* hermite_cmd = app.add_subcommand("hermite", "coefficient table of the monic Hermite polynomial H_n");
    int hermite_n = 0;
    hermite_cmd->add_option("--n", hermite_n, "degree")->required()->check(CLI::NonNegativeNumber);
    OutputSink hermite_sink;
    hermite_sink.add_options(hermite_cmd);

    // moments
    auto* moments_cmd = app.add_subcommand("moments", "M_n(2k) as an exact polynomial in n");
    int moments_k = 1;
    std::string moments_route = "interp";
    long moments_eval_n = -1;
    moments_cmd->add_option("--k", moments_k, "half-order of the moment")->required();
    moments_cmd->add_option("--route", moments_route, "computation route")
        ->check(CLI::IsMember({"interp", "det", "akl"}));
    auto* eval_opt = moments_cmd->add_option("--eval-n", moments_eval_n, "also evaluate the polynomial at n=N");
    OutputSink moments_sink;
    moments_sink.add_options(moments_cmd);

    // akl
    auto* akl_cmd = app.add_subcommand("akl", "the determinant-derived polynomial A(k,l)");
    int akl_k = 0, akl_l = 1;
    akl_cmd->add_option("--k", akl_k, "first index")->required();
    akl_cmd->add_option("--l", akl_l, "second index")->required();
    OutputSink akl_sink;
    akl_sink.add_options(akl_cmd);

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "lattice paths from the origin to (k,0)");
    int paths_k = 1;
    bool paths_weights = false, paths_count_only = false;
    paths_cmd->add_option("--k", paths_k, "endpoint (k,0)")->required();
    paths_cmd->add_flag("--weights", paths_weights, "include edge-product weight polynomials");
    paths_cmd->add_flag("--count-only", paths_count_only, "emit only the path count");
    OutputSink paths_sink;
    paths_sink.add_options(paths_cmd);

    // gf-check
    auto* gf_cmd = app.add_subcommand("gf-check", "fixed-point residual and c(z^2) bound on a rational z grid");
    int gf_nmax = 1, gf_grid_points = 6;
    gf_cmd->add_option("--n-max", gf_nmax, "largest Hermite degree")->required();
    gf_cmd->add_option("--grid", gf_grid_points, "number of grid points z = i/(3G), i = 1..G");
    gf_cmd->add_option("--threads", threads, "worker threads");
    OutputSink gf_sink;
    gf_sink.add_options(gf_cmd);

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "numerical roots of H_n and scaled moments");
    int roots_n = 1, roots_moments = -1;
    roots_cmd->add_option("--n", roots_n, "degree")->required();
    roots_cmd->add_option("--moments", roots_moments, "also emit scaled moments up to this order")
        ->check(CLI::NonNegativeNumber);
    OutputSink roots_sink;
    roots_sink.add_options(roots_cmd);

    // wigner-mc
    auto* mc_cmd = app.add_subcommand("wigner-mc", "Monte-Carlo expected characteristic polynomial");
    EnsembleConfig cfg;
    cfg.n = 4;
    cfg.samples = 100000;
    cfg.seed = kMcRegressionSeed;
    std::string mc_dist = "rademacher";
    int mc_hist = 0;
    mc_cmd->add_option("--n", cfg.n, "matrix size")->required();
    mc_cmd->add_option("--dist", mc_dist, "entry law")->check(CLI::IsMember({"rademacher", "gaussian"}));
    mc_cmd->add_option("--c", cfg.c, "off-diagonal standard deviation");
    mc_cmd->add_option("--samples", cfg.samples, "number of matrices");
    mc_cmd->add_option("--seed", cfg.seed, "RNG seed");
    mc_cmd->add_option("--hist", mc_hist, "also emit a spectral histogram with this many bins");
    mc_cmd->add_option("--threads", threads, "worker threads");
    OutputSink mc_sink;
    mc_sink.add_options(mc_cmd, /*with_format=*/false);
    mc_sink.format = "json";

    // verify-all
    auto* verify_cmd = app.add_subcommand("verify-all", "run the full cross-route verification suite");
    verify_cmd->add_option("--threads", threads, "worker threads");
    OutputSink verify_sink;
    verify_sink.add_options(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        json rec;
        rec["error"] = {{"type", "usage"}, {"message", e.what()}};
        err << rec.dump() << "\n";
        return 2;
    }

    try {
        if (hermite_cmd->parsed()) {
            run_hermite(hermite_n, hermite_sink);
            hermite_sink.finish("hermite", {{"n", hermite_n}, {"format", hermite_sink.format}}, out);
        } else if (moments_cmd->parsed()) {
            const bool has_eval = eval_opt->count() > 0;
            run_moments(moments_k, moments_route, moments_eval_n, has_eval, moments_sink);
            json params = {{"k", moments_k}, {"route", moments_route}, {"format", moments_sink.format}};
            if (has_eval) params["eval_n"] = moments_eval_n;
            moments_sink.finish("moments", params, out);
        } else if (akl_cmd->parsed()) {
            run_akl(akl_k, akl_l, akl_sink);
            akl_sink.finish("akl", {{"k", akl_k}, {"l", akl_l}, {"format", akl_sink.format}}, out);
        } else if (paths_cmd->parsed()) {
            run_paths(paths_k, paths_weights, paths_count_only, paths_sink);
            paths_sink.finish("paths",
                              {{"k", paths_k},
                               {"weights", paths_weights},
                               {"count_only", paths_count_only},
                               {"format", paths_sink.format}},
                              out);
        } else if (gf_cmd->parsed()) {
            run_gf_check(gf_nmax, gf_grid_points, threads, gf_sink);
            gf_sink.finish(
                "gf-check",
                {{"n_max", gf_nmax}, {"grid", gf_grid_points}, {"threads", threads}, {"format", gf_sink.format}},
                out);
        } else if (roots_cmd->parsed()) {
            run_roots(roots_n, roots_moments, roots_sink);
            json params = {{"n", roots_n}, {"format", roots_sink.format}};
            if (roots_moments >= 0) params["moments"] = roots_moments;
            roots_sink.finish("roots", params, out);
        } else if (mc_cmd->parsed()) {
            cfg.dist = entry_law_from_string(mc_dist);
            run_wigner_mc(cfg, mc_hist, threads, mc_sink);
            json params = {{"n", cfg.n},       {"dist", mc_dist},          {"c", cfg.c},
                           {"samples", cfg.samples}, {"seed", cfg.seed},   {"hist", mc_hist},
                           {"threads", threads}};
            mc_sink.finish("wigner-mc", params, out);
        } else if (verify_cmd->parsed()) {
            const int code = run_verify_all(threads, verify_sink);
            verify_sink.finish("verify-all", {{"threads", threads}, {"format", verify_sink.format}}, out);
            return code;
        }
        return 0;
    } catch (const usage_error& e) {
        json rec;
        rec["error"] = {{"type", "usage"}, {"message", e.what()}};
        err << rec.dump() << "\n";
        return 2;
    } catch (const consistency_error& e) {
        json rec;
        rec["error"] = {{"type", "consistency"}, {"message", e.what()}};
        err << rec.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json rec;
        rec["error"] = {{"type", "numeric"}, {"message", e.what()}};
        err << rec.dump() << "\n";
        return 1;
    }
}

}  // namespace hmom
