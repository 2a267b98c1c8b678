// rzeta: Reidemeister numbers and zeta functions of crystallographic groups
// with diagonal Z_2 holonomy, with exact arithmetic throughout.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "rzeta/jobspec.hpp"
#include "rzeta/oracles.hpp"
#include "rzeta/zeta.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rzeta;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;
constexpr int kExitZetaUndefined = 4;
constexpr int kExitVerifyFailed = 5;

struct CliFailure {
    int code;
    std::string message;
};

unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RZETA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 64));
    }
    return std::min(hw, 8u);
}

std::pair<JobSpec, ValidatedAut> load_validated(const std::string& path) {
    JobSpec spec = [&] {
        try {
            return load_jobspec(path);
        } catch (const jobspec_error& e) {
            throw CliFailure{kExitIo, e.what()};
        }
    }();
    try {
        ValidatedAut aut = validate(spec.g, spec.aut);
        return {std::move(spec), std::move(aut)};
    } catch (const validation_error& e) {
        throw CliFailure{kExitValidation, e.what()};
    }
}

std::string format_radius(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

ordered_json coeff_array(const PolyZ& p) {
    ordered_json arr = ordered_json::array();
    bool fits = true;
    for (const auto& c : p.coeffs())
        if (!c.fits_slong_p()) fits = false;
    for (const auto& c : p.coeffs()) {
        if (fits)
            arr.push_back(static_cast<long long>(c.get_si()));
        else
            arr.push_back(c.get_str());
    }
    if (arr.empty()) arr.push_back(0);
    return arr;
}

std::string poly_latex(const PolyZ& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(p.degree()); ++i) {
        const mpz_class& a = p.coeff(i);
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (out.empty())
            out += a < 0 ? "-" : "";
        else
            out += a < 0 ? " - " : " + ";
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i == 1) out += "z";
        if (i >= 2) out += "z^{" + std::to_string(i) + "}";
    }
    return out;
}

int cmd_rnum(const std::string& path, std::uint64_t min_m, std::uint64_t max_m, bool as_json) {
    auto [spec, aut] = load_validated(path);
    if (min_m < 1 || max_m < min_m) throw CliFailure{kExitIo, "bad power range"};
    bool rinf = spec.g.holonomy_rank == 1;

    std::vector<RNumber> rs = reidemeister_sequence(aut, max_m, thread_budget());
    if (as_json) {
        ordered_json out;
        out["min"] = min_m;
        out["max"] = max_m;
        ordered_json vals = ordered_json::array();
        for (std::uint64_t m = min_m; m <= max_m; ++m) vals.push_back(rs[m - 1].str());
        out["rnumbers"] = vals;
        if (rinf) out["note"] = "R-infinity: holonomy_rank 1";
        std::cout << out.dump() << "\n";
    } else {
        if (rinf) std::cout << "# holonomy_rank 1: the group has the R-infinity property\n";
        for (std::uint64_t m = min_m; m <= max_m; ++m)
            std::cout << m << "\t" << rs[m - 1].str() << "\n";
    }
    return 0;
}

PipelineResult run_pipeline(const ValidatedAut& aut) {
    try {
        return full_pipeline(aut, thread_budget());
    } catch (const zeta_undefined& e) {
        throw CliFailure{kExitZetaUndefined, e.what()};
    }
}

int cmd_zeta(const std::string& path, std::uint64_t series_terms, bool latex, bool as_json) {
    auto [spec, aut] = load_validated(path);
    PipelineResult res = run_pipeline(aut);

    ordered_json sf = ordered_json::object();
    for (const auto& [i, c] : res.second_combo.coeffs()) sf[std::to_string(i)] = c;

    std::string latex_str;
    if (latex) {
        const std::size_t k = spec.g.holonomy_rank;
        PolyZ shown_den = res.fn.denominator;
        std::string tail;
        if (k == spec.g.n && !res.second_combo.coeffs().empty()) {
            // factor the (1 - z^i)^{c_i} part out of the denominator
            PolyZ sf_poly = second_factor(res.second_combo).denominator;
            shown_den = res.fn.denominator.divrem(sf_poly).first;
            for (const auto& [i, c] : res.second_combo.coeffs()) {
                std::string zi = i == 1 ? "z" : "z^{" + std::to_string(i) + "}";
                tail += " (1 - " + zi + ")^{-" + std::to_string(c) + "}";
            }
        }
        latex_str = "R_{\\varphi}(z) = \\frac{" + poly_latex(res.fn.numerator) + "}{" +
                    poly_latex(shown_den) + "}" + tail;
    }

    if (as_json) {
        ordered_json out;
        out["numerator"] = coeff_array(res.fn.numerator);
        out["denominator"] = coeff_array(res.fn.denominator);
        out["radius"] = res.r.value;
        out["radius_error"] = res.r.error_bound;
        out["degree_bound"] = res.fn.degree_bound_used;
        out["certified"] = res.fn.certified;
        out["second_factor_c"] = sf;
        if (series_terms > 0) {
            ordered_json ser = ordered_json::array();
            for (std::size_t i = 0; i < series_terms && i < res.series.size(); ++i)
                ser.push_back(res.series[i].get_str());
            out["series"] = ser;
        }
        if (latex) out["latex"] = latex_str;
        std::cout << out.dump() << "\n";
        return 0;
    }

    std::cout << "numerator:     " << coeff_array(res.fn.numerator).dump() << "\n";
    std::cout << "denominator:   " << coeff_array(res.fn.denominator).dump() << "\n";
    std::cout << "certified:     " << (res.fn.certified ? "yes" : "no") << " (degree bound "
              << res.fn.degree_bound_used << ")\n";
    std::cout << "radius:        " << format_radius(res.r.value) << " +- 1e-9\n";
    std::cout << "second factor: " << sf.dump() << "\n";
    if (series_terms > 0) {
        std::cout << "series:       ";
        for (std::size_t i = 0; i < series_terms && i < res.series.size(); ++i)
            std::cout << " " << res.series[i].get_str();
        std::cout << "\n";
    }
    if (latex) std::cout << "latex:         " << latex_str << "\n";
    return 0;
}

int cmd_exists(const std::string& path, bool as_json) {
    auto [spec, aut] = load_validated(path);
    ZetaExistence ze = zeta_exists(aut);
    if (as_json) {
        ordered_json out;
        out["exists"] = ze.exists;
        out["reason"] = ze.reason;
        if (ze.cyclotomic_index) out["cyclotomic_index"] = ze.cyclotomic_index;
        std::cout << out.dump() << "\n";
    } else if (ze.exists) {
        std::cout << "true\n";
    } else {
        std::cout << "false (" << ze.reason << ")\n";
    }
    return 0;
}

int cmd_series(const std::string& path, std::uint64_t terms, bool as_json) {
    auto [spec, aut] = load_validated(path);
    std::vector<RNumber> rs;
    PowerSeriesQ e;
    try {
        rs = reidemeister_sequence(aut, terms, thread_budget());
        e = zeta_series(rs);
    } catch (const zeta_undefined& ex) {
        throw CliFailure{kExitZetaUndefined, ex.what()};
    }
    if (as_json) {
        ordered_json out;
        ordered_json ser = ordered_json::array();
        for (const auto& c : e) ser.push_back(c.get_str());
        out["series"] = ser;
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < e.size(); ++i)
            std::cout << i << "\t" << e[i].get_str() << "\n";
    }
    return 0;
}

void print_report(const VerifyReport& rep) {
    std::printf("%s %-55s instances=%zu failures=%zu (%.1f ms)\n",
                rep.failures == 0 ? "PASS" : "FAIL", rep.check.c_str(), rep.instances,
                rep.failures, rep.wall_ms);
}

int cmd_verify(const std::string& path, std::size_t random_count, std::uint64_t seed,
               std::size_t dim_cap) {
    std::vector<VerifyReport> reports;
    if (!path.empty()) {
        auto [spec, aut] = load_validated(path);
        reports = run_instance_verification(aut);

        if (spec.expect.rnumbers) {
            VerifyReport rep{"expected Reidemeister numbers"};
            const auto& want = *spec.expect.rnumbers;
            for (std::size_t m = 1; m <= want.size(); ++m) {
                if (!(reidemeister_number(aut, m) == want[m - 1])) ++rep.failures;
                ++rep.instances;
            }
            reports.push_back(rep);
        }
        if (spec.expect.numerator || spec.expect.denominator) {
            VerifyReport rep{"expected zeta closed form"};
            rep.instances = 1;
            try {
                PipelineResult res = full_pipeline(aut, thread_budget());
                if (spec.expect.numerator && res.fn.numerator.coeffs() != *spec.expect.numerator)
                    ++rep.failures;
                if (spec.expect.denominator &&
                    res.fn.denominator.coeffs() != *spec.expect.denominator)
                    ++rep.failures;
            } catch (const zeta_undefined&) {
                ++rep.failures;
            }
            reports.push_back(rep);
        }
    }
    if (random_count > 0) {
        auto rnd = run_random_verification(seed, random_count, dim_cap);
        reports.insert(reports.end(), rnd.begin(), rnd.end());
    }
    if (reports.empty()) throw CliFailure{kExitIo, "nothing to verify: give a file or --random"};

    std::size_t failed = 0;
    for (const auto& rep : reports) {
        print_report(rep);
        if (rep.failures) ++failed;
    }
    if (failed) {
        std::printf("verification FAILED (%zu check%s)\n", failed, failed == 1 ? "" : "s");
        return kExitVerifyFailed;
    }
    std::printf("all checks passed\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reidemeister numbers and zeta functions of crystallographic groups "
                 "with diagonal Z_2 holonomy"};
    app.require_subcommand(1);

    std::string input;
    std::uint64_t min_m = 1, max_m = 10, terms = 10, series_terms = 0;
    bool as_json = false, latex = false;
    std::size_t random_count = 0, dim_cap = 6;
    std::uint64_t seed = 1;

    auto* rnum = app.add_subcommand("rnum", "Reidemeister numbers R(phi^m) for a power range");
    rnum->add_option("input", input, "instance JSON file")->required();
    rnum->add_option("--min", min_m, "first power");
    rnum->add_option("--max", max_m, "last power");
    rnum->add_flag("--json", as_json, "machine-readable output");

    auto* zeta = app.add_subcommand("zeta", "certified rational closed form of R_phi(z)");
    zeta->add_option("input", input, "instance JSON file")->required();
    zeta->add_option("--series", series_terms, "also print the first N series coefficients");
    zeta->add_flag("--latex", latex, "render the closed form as LaTeX");
    zeta->add_flag("--json", as_json, "machine-readable output");

    auto* exists = app.add_subcommand("exists", "does the Reidemeister zeta function exist?");
    exists->add_option("input", input, "instance JSON file")->required();
    exists->add_flag("--json", as_json, "machine-readable output");

    auto* series = app.add_subcommand("series", "exact zeta series coefficients e_0..e_N");
    series->add_option("input", input, "instance JSON file")->required();
    series->add_option("--terms", terms, "number of Reidemeister numbers to use");
    series->add_flag("--json", as_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "cross-validate with brute-force oracles");
    verify->add_option("input", input, "instance JSON file (optional)");
    verify->add_option("--random", random_count, "number of randomized instances");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--dim", dim_cap, "dimension cap for randomized instances");

    CLI11_PARSE(app, argc, argv);

    try {
        if (rnum->parsed()) return cmd_rnum(input, min_m, max_m, as_json);
        if (zeta->parsed()) return cmd_zeta(input, series_terms, latex, as_json);
        if (exists->parsed()) return cmd_exists(input, as_json);
        if (series->parsed()) return cmd_series(input, terms, as_json);
        if (verify->parsed()) return cmd_verify(input, random_count, seed, dim_cap);
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
