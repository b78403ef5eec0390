// Command-line front end: sweeps, ensemble comparison, diagonalization and
// finite-size scaling, all emitted as CSV.
#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "dicke/canonical.hpp"
#include "dicke/csv.hpp"
#include "dicke/diag.hpp"
#include "dicke/micro.hpp"
#include "dicke/scaling.hpp"
#include "dicke/sector.hpp"

namespace {

using namespace dicke;

struct CommonOpts {
    ModelParams params;
    std::string output;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--omega", opts.params.omega, "photon frequency");
    cmd->add_option("--omega0", opts.params.omega0, "atomic splitting");
    cmd->add_option("--lambda", opts.params.lambda, "coupling strength");
    cmd->add_option("--n", opts.params.n_atoms, "number of atoms");
    cmd->add_option("--epsilon", opts.params.epsilon, "symmetry-breaking field");
    cmd->add_option("-o,--output", opts.output, "output CSV path (default: stdout)");
    cmd->add_option("--threads", opts.threads, "worker thread cap");
}

struct GridOpts {
    double e_min = -2.0, e_max = 1.0, e_step = 1e-3;
};

void add_grid(CLI::App* cmd, GridOpts& g) {
    cmd->add_option("--e-min", g.e_min, "lower E/N");
    cmd->add_option("--e-max", g.e_max, "upper E/N");
    cmd->add_option("--e-step", g.e_step, "E/N step");
}

std::vector<double> linear_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi > lo)) throw std::domain_error("grid: need e_min < e_max, e_step > 0");
    std::vector<double> g;
    for (double e = lo; e <= hi + 0.5 * step; e += step) g.push_back(e);
    return g;
}

// Writes to the chosen file, or stdout when no path was given.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::domain_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void apply_threads(const CommonOpts& opts) {
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
}

// Expands "--config PATH" into the flags listed in PATH (one key=value per
// line, '#' comments), inserted right after the subcommand name so that
// explicit flags override them under the take-last policy.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::vector<std::string> out;
    std::vector<std::string> from_file;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config") {
            if (k + 1 >= args.size()) throw std::domain_error("--config needs a file path");
            std::ifstream in(args[k + 1]);
            if (!in) throw std::domain_error("cannot read config file: " + args[k + 1]);
            std::string line;
            while (std::getline(in, line)) {
                const auto hash = line.find('#');
                if (hash != std::string::npos) line.erase(hash);
                const auto eq = line.find('=');
                if (eq == std::string::npos) continue;
                auto trim = [](std::string s) {
                    s.erase(0, s.find_first_not_of(" \t"));
                    const auto e = s.find_last_not_of(" \t");
                    s.erase(e == std::string::npos ? 0 : e + 1);
                    return s;
                };
                const std::string key = trim(line.substr(0, eq));
                const std::string value = trim(line.substr(eq + 1));
                if (key.empty()) continue;
                from_file.push_back("--" + key);
                if (!value.empty()) from_file.push_back(value);
            }
            ++k;  // skip the path
        } else {
            out.push_back(args[k]);
        }
    }
    if (!from_file.empty() && !out.empty())
        out.insert(out.begin() + 1, from_file.begin(), from_file.end());
    return out;
}

std::string cache_directory(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    const char* env = std::getenv("DICKE_CACHE_DIR");
    return env ? env : "";
}

int run_sector(const CommonOpts& opts, const GridOpts& grid, double j_fraction) {
    apply_threads(opts);
    const int twice_j = static_cast<int>(std::lround(2.0 * j_fraction * opts.params.n_atoms));
    const SectorId sector(opts.params.n_atoms, twice_j);
    if (sector.j() <= 0.0) throw std::domain_error("sector sweep needs j > 0");
    // grid is given in E/N; the curve is tabulated in E/j
    std::vector<double> e_over_j;
    for (double e : linear_grid(grid.e_min, grid.e_max, grid.e_step))
        e_over_j.push_back(e / sector.x());
    const sector::SectorCurve curve = sector::sector_curve_omp(opts.params, sector, e_over_j);
    Sink sink(opts.output);
    csv::write_sector_curve(sink.stream(), curve);
    return 0;
}

int run_micro(const CommonOpts& opts, const GridOpts& grid, bool lowest_sector) {
    apply_threads(opts);
    micro::FullModel model(opts.params, {}, {},
                           lowest_sector ? micro::DosMode::lowest_sector
                                         : micro::DosMode::full_integral);
    const micro::ThermoCurve curve = model.curve_omp(linear_grid(grid.e_min, grid.e_max, grid.e_step));
    Sink sink(opts.output);
    csv::write_thermo_curve(sink.stream(), curve);
    return 0;
}

micro::ThermoCurve canonical_curve(const ModelParams& params, const std::vector<double>& betas,
                                   bool jmax_only) {
    const auto log_z = [&](double beta) {
        return jmax_only ? canonical::partition_jmax(params, beta)
                         : canonical::partition_full(params, beta, params.epsilon);
    };
    micro::ThermoCurve c;
    c.ensemble = micro::Ensemble::canonical;
    c.n_atoms = params.n_atoms;
    c.beta = betas;
    const std::vector<double> energies = canonical::energy_canonical(log_z, betas);
    const std::size_t m = betas.size();
    c.e_per_n.resize(m);
    c.jz_per_n.resize(m);
    c.jx_plus_per_n.assign(m, 0.0);   // <Jx> = 0 in the canonical ensemble
    c.jx_minus_per_n.assign(m, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(m); ++k) {
        c.e_per_n[k] = energies[k] / params.n_atoms;
        const auto log_z_of_w0 = [&](double w0) {
            ModelParams p = params;
            p.omega0 = w0;
            return jmax_only ? canonical::partition_jmax(p, betas[k])
                             : canonical::partition_full(p, betas[k], p.epsilon);
        };
        c.jz_per_n[k] =
            canonical::jz_canonical(log_z_of_w0, betas[k], {params.omega0}).front() /
            params.n_atoms;
    }
    return c;
}

int run_canonical(const CommonOpts& opts, double beta_min, double beta_max, double beta_step,
                  bool jmax_only) {
    apply_threads(opts);
    const micro::ThermoCurve curve =
        canonical_curve(opts.params, linear_grid(beta_min, beta_max, beta_step), jmax_only);
    Sink sink(opts.output);
    csv::write_thermo_curve(sink.stream(), curve);
    return 0;
}

int run_laplace(const CommonOpts& opts, double beta_min, double beta_max, double beta_step) {
    apply_threads(opts);
    const std::vector<double> betas = linear_grid(beta_min, beta_max, beta_step);
    micro::ThermoCurve c;
    c.ensemble = micro::Ensemble::laplace;
    c.n_atoms = opts.params.n_atoms;
    c.beta = betas;
    const std::size_t m = betas.size();
    c.e_per_n.resize(m);
    c.jz_per_n.resize(m);
    c.jx_plus_per_n.resize(m);
    c.jx_minus_per_n.resize(m);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(m); ++k) {
        const canonical::Observables obs = canonical::laplace_observables(
            betas[k], opts.params, canonical::EpsilonMode::limit_plus);
        c.e_per_n[k] = obs.e_per_n;
        c.jz_per_n[k] = obs.jz_per_n;
        c.jx_plus_per_n[k] = std::abs(obs.jx_per_n);
        c.jx_minus_per_n[k] = -std::abs(obs.jx_per_n);
    }
    Sink sink(opts.output);
    csv::write_thermo_curve(sink.stream(), c);
    try {
        csv::write_critical_point(std::cerr, canonical::critical_beta(opts.params));
    } catch (const std::exception& ex) {
        std::cerr << "critical_point: " << ex.what() << "\n";
    }
    return 0;
}

int run_compare(const CommonOpts& opts, const GridOpts& grid) {
    apply_threads(opts);
    micro::FullModel model(opts.params);
    const std::vector<double> e_grid = linear_grid(grid.e_min, grid.e_max, grid.e_step);
    const micro::ThermoCurve mc = model.curve_omp(e_grid);

    Sink sink(opts.output);
    std::ostream& out = sink.stream();
    out << "E_per_N,beta_micro,beta_canonical,jz_micro,jz_canonical,jx_micro_plus,"
           "jx_laplace_eps\n";
    double max_beta_dev = 0.0, max_jz_dev = 0.0, max_jx_dev = 0.0;
    for (std::size_t k = 0; k < e_grid.size(); ++k) {
        const double e = e_grid[k];
        double beta_can = std::numeric_limits<double>::quiet_NaN();
        double jz_can = beta_can, jx_lap = beta_can;
        if (e < 0.0) {
            const double beta = canonical::laplace_beta_of_energy(e, opts.params);
            const canonical::Observables obs = canonical::laplace_observables(
                beta, opts.params, canonical::EpsilonMode::limit_plus);
            beta_can = beta;
            jz_can = obs.jz_per_n;
            jx_lap = std::abs(obs.jx_per_n);
            if (std::isfinite(mc.beta[k])) {
                max_beta_dev = std::max(max_beta_dev, std::abs(mc.beta[k] - beta) / beta);
                max_jz_dev = std::max(max_jz_dev, std::abs(mc.jz_per_n[k] - jz_can));
                max_jx_dev = std::max(max_jx_dev, std::abs(mc.jx_plus_per_n[k] - jx_lap));
            }
        }
        out << csv::format_double(e) << ',' << csv::format_double(mc.beta[k]) << ','
            << csv::format_double(beta_can) << ',' << csv::format_double(mc.jz_per_n[k]) << ','
            << csv::format_double(jz_can) << ',' << csv::format_double(mc.jx_plus_per_n[k])
            << ',' << csv::format_double(jx_lap) << '\n';
    }
    std::ostream& summary = opts.output.empty() ? std::cout : std::cerr;
    summary << "max_rel_beta_dev=" << csv::format_double(max_beta_dev) << '\n'
            << "max_jz_dev=" << csv::format_double(max_jz_dev) << '\n'
            << "max_jx_dev=" << csv::format_double(max_jx_dev) << '\n';
    try {
        csv::write_critical_point(summary, canonical::critical_beta(opts.params));
    } catch (const std::exception& ex) {
        summary << "critical_point: " << ex.what() << '\n';
    }
    return 0;
}

int run_diag(const CommonOpts& opts, int n_max, double bins, bool no_split,
             const std::string& cache_flag) {
    apply_threads(opts);
    bool cache_hit = false;
    const std::vector<diag::SpectrumCache> caches =
        diag::diagonalize_all(opts.params, n_max, cache_directory(cache_flag), &cache_hit);
    const auto rows =
        diag::histogram_observables(caches, opts.params.n_atoms, bins, !no_split);
    Sink sink(opts.output);
    csv::write_histogram(sink.stream(), rows);
    std::cerr << "cached: " << (cache_hit ? "true" : "false") << '\n';
    return 0;
}

int run_scaling(const CommonOpts& opts, const std::string& observable,
                std::vector<int> n_ladder, double threshold) {
    apply_threads(opts);
    if (n_ladder.empty()) n_ladder = scaling::default_n_ladder();
    const auto rows = scaling::scaling_table(opts.params, n_ladder, threshold);
    Sink sink(opts.output);
    csv::write_scaling_table(sink.stream(), rows);
    std::vector<double> ns, deltas;
    for (const auto& r : rows) {
        ns.push_back(r.n_atoms);
        if (observable == "jz") deltas.push_back(r.delta_e_jz);
        else if (observable == "jx") deltas.push_back(r.delta_e_jx);
        else if (observable == "jzc") deltas.push_back(r.delta_jz);
        else throw std::domain_error("scaling: observable must be jz, jx, or jzc");
    }
    std::ostream& summary = opts.output.empty() ? std::cout : std::cerr;
    csv::write_fit_summary(summary, scaling::fit_powerlaw(ns, deltas));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermodynamics of the full Dicke model: microcanonical and canonical "
                 "ensembles, exact diagonalization, finite-size scaling"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    CommonOpts opts;
    GridOpts grid;
    double j_fraction = 0.5;
    bool lowest_sector = false, jmax_only = false, no_split = false;
    double beta_min = 0.01, beta_max = 1.0, beta_step = 0.01;
    int n_max = 150;
    double bins = 0.05, threshold = 0.01;
    std::string observable = "jz", cache_flag;
    std::vector<int> n_ladder;

    CLI::App* sector = app.add_subcommand("sector", "single j-sector semiclassical sweep");
    add_common(sector, opts);
    add_grid(sector, grid);
    sector->add_option("--j-fraction", j_fraction, "j/N of the sector");

    CLI::App* micro_cmd = app.add_subcommand("micro", "full-model microcanonical sweep");
    add_common(micro_cmd, opts);
    add_grid(micro_cmd, grid);
    micro_cmd->add_flag("--lowest-sector", lowest_sector,
                        "comparison mode: lowest accessible sector only");

    CLI::App* canonical_cmd =
        app.add_subcommand("canonical", "finite-N canonical sweep over beta");
    add_common(canonical_cmd, opts);
    canonical_cmd->add_option("--beta-min", beta_min);
    canonical_cmd->add_option("--beta-max", beta_max);
    canonical_cmd->add_option("--beta-step", beta_step);
    canonical_cmd->add_flag("--jmax-only", jmax_only, "restrict to the j = N/2 sector");

    CLI::App* laplace = app.add_subcommand("laplace", "thermodynamic-limit sweep over beta");
    add_common(laplace, opts);
    laplace->add_option("--beta-min", beta_min);
    laplace->add_option("--beta-max", beta_max);
    laplace->add_option("--beta-step", beta_step);

    CLI::App* compare = app.add_subcommand("compare", "micro vs canonical joined report");
    add_common(compare, opts);
    add_grid(compare, grid);

    CLI::App* diag_cmd = app.add_subcommand("diag", "exact diagonalization histograms");
    add_common(diag_cmd, opts);
    diag_cmd->add_option("--n-max", n_max, "photon truncation");
    diag_cmd->add_option("--bins", bins, "histogram bin width in E/N");
    diag_cmd->add_flag("--no-split", no_split, "do not split bins by sign of <Jx>");
    diag_cmd->add_option("--cache-dir", cache_flag,
                         "spectrum cache directory (or DICKE_CACHE_DIR)");

    CLI::App* scaling_cmd = app.add_subcommand("scaling", "finite-size scaling fits");
    add_common(scaling_cmd, opts);
    scaling_cmd->add_option("--observable", observable, "jz | jx | jzc");
    scaling_cmd->add_option("--n-ladder", n_ladder, "N values (default 1e3..1e5)");
    scaling_cmd->add_option("--threshold", threshold, "Jx cutoff for the jx precursor");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }

    try {
        opts.params.validate();
        if (sector->parsed()) return run_sector(opts, grid, j_fraction);
        if (micro_cmd->parsed()) return run_micro(opts, grid, lowest_sector);
        if (canonical_cmd->parsed())
            return run_canonical(opts, beta_min, beta_max, beta_step, jmax_only);
        if (laplace->parsed()) return run_laplace(opts, beta_min, beta_max, beta_step);
        if (compare->parsed()) return run_compare(opts, grid);
        if (diag_cmd->parsed()) return run_diag(opts, n_max, bins, no_split, cache_flag);
        if (scaling_cmd->parsed()) return run_scaling(opts, observable, n_ladder, threshold);
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "numerical failure: " << ex.what() << '\n';
        return 3;
    }
    return 2;
}
