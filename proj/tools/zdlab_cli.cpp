// zdlab command-line front end. Every output file starts with a comment line
// carrying the FNV-1a hash of the canonical configuration.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdlab/burgers_multivalued.hpp"
#include "zdlab/chi_transport.hpp"
#include "zdlab/errors.hpp"
#include "zdlab/properties_harness.hpp"
#include "zdlab/raney_comb.hpp"
#include "zdlab/zd_spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zdl;

namespace {

enum ExitCode { kOk = 0, kPropertyFail = 1, kUsage = 2, kNumerical = 3 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string datum_path;
    std::vector<double> times;
    int order = 256;
    int k_max = 32;
    std::vector<double> epsilons;
    int grid = 256;
    long seed = static_cast<long>(kDefaultSeed);
    std::string out_dir = ".";
    // raney
    int d_max = 3;
    int bound = 3;
    // trotter
    std::vector<int> steps;
    int ref_cells = 4096;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const json& config) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(config.dump())));
    return buf;
}

class OutputFile {
public:
    OutputFile(const Options& o, const std::string& name, const json& config) {
        fs::create_directories(o.out_dir);
        path_ = (fs::path(o.out_dir) / name).string();
        out_.open(path_);
        if (!out_) throw ConfigError("cannot write " + path_);
        out_ << "# config_hash=" << hash_hex(config) << "\n";
    }
    std::ofstream& stream() { return out_; }
    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ofstream out_;
};

TorusFunction load_datum(const Options& o) {
    if (o.datum_path.empty()) throw ConfigError("--datum is required");
    std::ifstream in(o.datum_path);
    if (!in) throw ConfigError("cannot open datum file " + o.datum_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("datum file " + o.datum_path + " is not valid JSON: " + e.what());
    }
    return torus_from_json(j);
}

json base_config(const std::string& command, const Options& o, const std::optional<TorusFunction>& datum) {
    json c;
    c["command"] = command;
    if (datum) c["datum"] = torus_to_json(*datum);
    c["t"] = o.times;
    c["K"] = o.order;
    c["kmax"] = o.k_max;
    c["eps"] = o.epsilons;
    c["grid"] = o.grid;
    c["seed"] = o.seed;
    return c;
}

void check_times(const std::vector<double>& ts) {
    if (ts.empty()) throw ConfigError("--t needs at least one time");
    for (double t : ts)
        if (!std::isfinite(t)) throw ConfigError("times must be finite");
}

std::string time_tag(double t) {
    std::ostringstream s;
    s << t;
    return s.str();
}

void write_profile(const Options& o, const std::string& name, const json& config, const std::vector<double>& xs,
                   const std::vector<double>& vs) {
    OutputFile f(o, name, config);
    f.stream() << "x,value\n";
    for (std::size_t j = 0; j < xs.size(); ++j) f.stream() << fmt(xs[j]) << "," << fmt(vs[j]) << "\n";
}

int cmd_zd(const Options& o) {
    const TorusFunction u0 = load_datum(o);
    check_times(o.times);
    const json config = base_config("zd", o, u0);
    const auto xs = torus_grid(o.grid);
    OutputFile summary(o, "zd_summary.csv", config);
    summary.stream() << "t,spectral_vs_quadrature,spectral_vs_characteristics,quadrature_vs_characteristics,caustic_points\n";
    for (double t : o.times) {
        const TorusFunction spectral = zd_profile(u0, t, o.order, o.k_max);
        std::vector<double> a;
        std::vector<double> b;
        std::vector<double> c;
        int caustics = 0;
        for (double x : xs) {
            a.push_back(spectral(x));
            b.push_back(as_profile_quadrature(u0, t, x));
            const BranchSet br = branches(u0, t, x);
            if (br.caustic) {
                ++caustics;
                c.push_back(std::nan(""));
            } else {
                c.push_back(alternating_sum(br));
            }
        }
        double ab = 0.0;
        double ac = 0.0;
        double bc = 0.0;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            ab = std::max(ab, std::abs(a[j] - b[j]));
            if (!std::isnan(c[j])) {
                ac = std::max(ac, std::abs(a[j] - c[j]));
                bc = std::max(bc, std::abs(b[j] - c[j]));
            }
        }
        const std::string tag = time_tag(t);
        write_profile(o, "zd_spectral_t" + tag + ".csv", config, xs, a);
        write_profile(o, "zd_quadrature_t" + tag + ".csv", config, xs, b);
        write_profile(o, "zd_characteristics_t" + tag + ".csv", config, xs, c);
        summary.stream() << fmt(t) << "," << fmt(ab) << "," << fmt(ac) << "," << fmt(bc) << "," << caustics << "\n";
        std::cout << "t=" << t << "  max|spectral-quadrature|=" << ab << "  max|spectral-characteristics|=" << ac
                  << "  max|quadrature-characteristics|=" << bc << "  caustic points=" << caustics << "\n";
    }
    return kOk;
}

int cmd_bo_eps(const Options& o) {
    const TorusFunction u0 = load_datum(o);
    check_times(o.times);
    if (o.epsilons.empty()) throw ConfigError("--eps needs at least one value");
    const json config = base_config("bo-eps", o, u0);
    OutputFile f(o, "bo_eps_coefficients.csv", config);
    f.stream() << "epsilon,t,k,re,im\n";
    for (double eps : o.epsilons) {
        const SpectralSolver solver(u0, eps, o.order);
        for (double t : o.times) {
            const auto c = solver.coefficients(t, o.k_max);
            for (int k = 0; k <= o.k_max; ++k)
                f.stream() << fmt(eps) << "," << fmt(t) << "," << k << "," << fmt(c[static_cast<std::size_t>(k)].real())
                           << "," << fmt(c[static_cast<std::size_t>(k)].imag()) << "\n";
        }
    }
    std::cout << "wrote " << f.path() << "\n";
    return kOk;
}

int cmd_sweep(const Options& o) {
    const TorusFunction u0 = load_datum(o);
    if (o.epsilons.empty()) throw ConfigError("--eps needs at least one value");
    const std::vector<double> times = o.times.empty() ? std::vector<double>{1.0} : o.times;
    check_times(times);
    const json config = base_config("sweep", o, u0);
    for (double t : times) {
        const auto rows = epsilon_sweep(u0, t, o.k_max, o.epsilons, o.order);
        OutputFile f(o, "sweep_t" + time_tag(t) + ".csv", config);
        f.stream() << "epsilon,k_max,max_abs_error\n";
        std::cout << "t=" << t << "\n";
        for (const auto& r : rows) {
            f.stream() << fmt(r.epsilon) << "," << r.k_max << "," << fmt(r.max_abs_error) << "\n";
            std::cout << "  eps=" << r.epsilon << "  max_abs_error=" << r.max_abs_error << "\n";
        }
    }
    return kOk;
}

int cmd_burgers(const Options& o) {
    const TorusFunction u0 = load_datum(o);
    check_times(o.times);
    const json config = base_config("burgers", o, u0);
    const auto xs = torus_grid(o.grid);
    std::vector<BranchSet> all;
    std::size_t widest = 0;
    for (double t : o.times)
        for (double x : xs) {
            all.push_back(branches(u0, t, x));
            widest = std::max(widest, all.back().roots.size());
        }
    OutputFile f(o, "branches.csv", config);
    f.stream() << "t,x,n_roots,caustic";
    for (std::size_t i = 0; i < widest; ++i) f.stream() << ",y" << i;
    f.stream() << "\n";
    for (const auto& b : all) {
        f.stream() << fmt(b.t) << "," << fmt(b.x) << "," << b.roots.size() << "," << (b.caustic ? 1 : 0);
        for (std::size_t i = 0; i < widest; ++i) {
            f.stream() << ",";
            if (i < b.roots.size()) f.stream() << fmt(b.roots[i]);
        }
        f.stream() << "\n";
    }
    std::cout << "wrote " << all.size() << " branch sets to " << f.path() << "\n";
    return kOk;
}

int cmd_trotter(const Options& o) {
    const TorusFunction u0 = load_datum(o);
    const std::vector<double> times = o.times.empty() ? std::vector<double>{0.5} : o.times;
    check_times(times);
    const std::vector<int> steps = o.steps.empty() ? std::vector<int>{4, 8, 16, 32, 64} : o.steps;
    json config = base_config("trotter", o, u0);
    config["steps"] = steps;
    config["ref_cells"] = o.ref_cells;
    for (double t : times) {
        const TorusFunction ref = godunov_reference(u0, t, o.ref_cells);
        OutputFile f(o, "trotter_t" + time_tag(t) + ".csv", config);
        f.stream() << "n,l1_error\n";
        std::cout << "t=" << t << " (reference: Godunov, " << o.ref_cells << " cells)\n";
        for (int n : steps) {
            const TorusFunction v = trotter_entropy(u0, t, n, o.grid);
            const double err = lp_norm([&](double x) { return v(x) - ref(x); }, 1.0, 4 * o.ref_cells);
            f.stream() << n << "," << fmt(err) << "\n";
            std::cout << "  n=" << n << "  l1_error=" << err << "\n";
        }
    }
    return kOk;
}

int cmd_raney(const Options& o) {
    json config;
    config["command"] = "raney";
    config["kmax"] = o.k_max;
    config["dmax"] = o.d_max;
    config["M"] = o.bound;
    const auto rows = verify_shift_words(o.k_max, o.d_max, o.bound);
    OutputFile f(o, "raney.csv", config);
    f.stream() << "k,d,M,words_checked,failures\n";
    long words = 0;
    long failures = 0;
    for (const auto& r : rows) {
        f.stream() << r.k << "," << r.d << "," << r.bound << "," << r.words_checked << "," << r.failures << "\n";
        std::cout << "k=" << r.k << " d=" << r.d << " M=" << r.bound << "  words=" << r.words_checked
                  << "  failures=" << r.failures << "\n";
        words += r.words_checked;
        failures += r.failures;
    }
    std::cout << "total words=" << words << " failures=" << failures << (words == 0 ? " (vacuous)" : "") << "\n";
    return failures == 0 ? kOk : kPropertyFail;
}

int cmd_verify(const Options& o) {
    const TorusFunction u0 = load_datum(o);
    const json config = base_config("verify", o, u0);
    const auto reports = run_property_suite(u0, static_cast<std::uint64_t>(o.seed), o.grid);
    OutputFile f(o, "verify.json", config);
    f.stream() << reports_to_json(reports).dump(2) << "\n";
    int failed = 0;
    for (const auto& r : reports) {
        if (!r.pass) {
            ++failed;
            std::cout << "FAIL " << r.property << " [" << r.inputs << "] measured=" << r.measured << " bound=" << r.bound
                      << "\n";
        }
    }
    std::cout << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " properties pass; report "
              << f.path() << "\n";
    return failed == 0 ? kOk : kPropertyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zdlab: zero-dispersion limit, multivalued Burgers and entropy solutions on the torus"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--datum", o.datum_path, "Initial datum (TorusFunction JSON)");
        sub->add_option("--t", o.times, "Times, comma separated")->delimiter(',');
        sub->add_option("--K", o.order, "Operator truncation order")->check(CLI::PositiveNumber);
        sub->add_option("--kmax", o.k_max, "Highest Fourier mode")->check(CLI::NonNegativeNumber);
        sub->add_option("--eps", o.epsilons, "Dispersion parameters, comma separated")->delimiter(',');
        sub->add_option("--grid", o.grid, "Grid points in x")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "Random seed");
        sub->add_option("--out", o.out_dir, "Output directory");
    };

    auto* zd = app.add_subcommand("zd", "Zero-dispersion profile by three independent routes");
    auto* bo = app.add_subcommand("bo-eps", "Small-dispersion Fourier coefficients");
    auto* sweep = app.add_subcommand("sweep", "Dispersion sweep against the zero-dispersion limit");
    auto* burgers = app.add_subcommand("burgers", "Multivalued Burgers branches by characteristics");
    auto* trotter = app.add_subcommand("trotter", "Transport-collapse convergence against a Godunov reference");
    auto* raney = app.add_subcommand("raney", "Exhaustive shift-word verification");
    auto* verify = app.add_subcommand("verify", "Run the property suite and emit a JSON report");
    for (auto* sub : {zd, bo, sweep, burgers, trotter, raney, verify}) add_common(sub);
    raney->add_option("--dmax", o.d_max, "Largest degree d")->check(CLI::NonNegativeNumber);
    raney->add_option("--M", o.bound, "Bound on the m-entries")->check(CLI::NonNegativeNumber);
    trotter->add_option("--n", o.steps, "Step counts, comma separated")->delimiter(',');
    trotter->add_option("--ref-cells", o.ref_cells, "Godunov reference cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (raney->parsed() && raney->count("--kmax") == 0) o.k_max = 3;

    try {
        if (zd->parsed()) return cmd_zd(o);
        if (bo->parsed()) return cmd_bo_eps(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (burgers->parsed()) return cmd_burgers(o);
        if (trotter->parsed()) return cmd_trotter(o);
        if (raney->parsed()) return cmd_raney(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumerical;
    }
    return kUsage;
}
