#include "dicke/micro.hpp"

#include <cmath>
#include <limits>

#include "dicke/degeneracy.hpp"
#include "dicke/quadrature.hpp"

namespace dicke::micro {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}  // namespace

std::string ensemble_name(Ensemble e) {
    switch (e) {
        case Ensemble::micro: return "micro";
        case Ensemble::canonical: return "canonical";
        case Ensemble::laplace: return "laplace";
    }
    return "?";
}

FullModel::FullModel(const ModelParams& params, XQuadSpec quad, sector::SectorTol tol,
                     DosMode mode)
    : params_(params), quad_(quad), tol_(tol), mode_(mode) {
    params_.validate();
    require_unit_frequencies(params_);
    if (quad_.nodes_per_panel < 2 || quad_.num_panels < 4)
        throw std::invalid_argument("x-quadrature spec too coarse");
    quad::GaussLegendre gl(quad_.nodes_per_panel);
    gl_nodes_ = gl.nodes;
    gl_weights_ = gl.weights;
}

double FullModel::energy_floor() const {
    const double lam = params_.lambda;
    const double n = params_.n_atoms;
    if (lam > 0.5) return -n * (lam * lam + 1.0 / (16.0 * lam * lam));
    return -0.5 * n;
}

double FullModel::support_lower_x(double energy) const {
    const double lam = params_.lambda;
    const double eps = energy / params_.n_atoms;
    if (eps >= 0.0) return 0.0;
    // sector ground energy per atom: -x for lambda_eff <= 1/2,
    // -(4 lam^2 x^2 + 1/(16 lam^2)) beyond
    const double x_c = lam > 0.0 ? 1.0 / (8.0 * lam * lam) : std::numeric_limits<double>::infinity();
    if (-eps <= std::min(x_c, 0.5) || lam <= 0.5) return -eps;
    return std::sqrt((-eps - 1.0 / (16.0 * lam * lam)) / (4.0 * lam * lam));
}

MicroPoint FullModel::point(double energy) const {
    const int n = params_.n_atoms;
    const double lam = params_.lambda;
    MicroPoint out{kNegInf, kNaN, kNaN};
    if (energy <= energy_floor()) return out;
    const double x_low = support_lower_x(energy);
    if (x_low >= 0.5) return out;

    if (mode_ == DosMode::lowest_sector && energy < 0.0) {
        // first-order thermodynamic-limit picture: everything sits in the
        // lowest accessible sector
        const double x_c = lam > 0.0 ? 1.0 / (8.0 * lam * lam) : 1e300;
        out.log_rho = degen::log_degeneracy(n, x_low);
        if (x_low <= x_c) {
            out.jz_per_n = -x_low;
            out.jx_plus_per_n = 0.0;
        } else {
            const double y0 = -1.0 / (8.0 * lam * lam * x_low);
            out.jz_per_n = -1.0 / (8.0 * lam * lam);
            out.jx_plus_per_n = x_low * std::sqrt(std::max(0.0, 1.0 - y0 * y0));
        }
        return out;
    }

    const double t_end = std::sqrt(0.5 - x_low);
    const int panels = quad_.num_panels;
    const int npp = quad_.nodes_per_panel;

    std::vector<double> log_terms;
    std::vector<double> vz, vx;
    log_terms.reserve((panels + 1) * npp);
    vz.reserve(log_terms.capacity());
    vx.reserve(log_terms.capacity());

    double t_hi = t_end;
    for (int p = 0; p <= panels; ++p) {
        const double t_lo = (p == panels) ? 0.0 : t_hi * 0.5;
        const double half = 0.5 * (t_hi - t_lo);
        const double mid = 0.5 * (t_hi + t_lo);
        for (int i = 0; i < npp; ++i) {
            const double t = mid + half * gl_nodes_[i];
            const double x = x_low + t * t;
            if (x <= 0.0 || x > 0.5) continue;
            const double j = n * x;
            const double lam_eff = lam * std::sqrt(2.0 * x);
            const double e = energy / j;
            const sector::SectorPoint sp = sector::sector_point(e, lam_eff, tol_);
            if (!(sp.rho_over_j > 0.0)) continue;
            const double f = degen::log_degeneracy(n, x) + std::log(j * sp.rho_over_j) +
                             std::log(2.0 * t) + std::log(gl_weights_[i] * half);
            log_terms.push_back(f);
            vz.push_back(x * sp.jz_over_j);
            // Bloch-sphere transverse radius: the aggregate coincides with
            // the canonical order parameter only under this weight
            vx.push_back(x * sp.jx_bloch_over_j);
        }
        t_hi = t_lo;
    }
    if (log_terms.empty()) return out;

    double m = log_terms.front();
    for (double f : log_terms)
        if (f > m) m = f;
    double s0 = 0.0, sz = 0.0, sx = 0.0;
    for (std::size_t k = 0; k < log_terms.size(); ++k) {
        const double w = std::exp(log_terms[k] - m);
        s0 += w;
        sz += w * vz[k];
        sx += w * vx[k];
    }
    out.log_rho = m + std::log(s0);
    out.jz_per_n = sz / s0;
    out.jx_plus_per_n = sx / s0;
    return out;
}

double FullModel::dos_full(double energy) const { return point(energy).log_rho; }

double FullModel::jz_full(double energy) const {
    const MicroPoint p = point(energy);
    if (!std::isfinite(p.log_rho))
        throw std::domain_error("jz_full: density of states vanishes at this energy");
    return p.jz_per_n;
}

double FullModel::jx_full(double energy, sector::Branch branch) const {
    const MicroPoint p = point(energy);
    if (!std::isfinite(p.log_rho))
        throw std::domain_error("jx_full: density of states vanishes at this energy");
    return branch == sector::Branch::plus ? p.jx_plus_per_n : -p.jx_plus_per_n;
}

ThermoCurve FullModel::curve(const std::vector<double>& grid, bool parallel) const {
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1]))
            throw std::invalid_argument("energy grid must be strictly increasing");
    const int n = params_.n_atoms;
    ThermoCurve c;
    c.ensemble = Ensemble::micro;
    c.n_atoms = n;
    c.e_per_n = grid;
    const std::size_t m = grid.size();
    c.jz_per_n.resize(m);
    c.jx_plus_per_n.resize(m);
    c.jx_minus_per_n.resize(m);
    std::vector<double> log_rho(m);
    std::vector<double> energies(m);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long k = 0; k < static_cast<long>(m); ++k) {
        energies[k] = grid[k] * n;
        const MicroPoint p = point(energies[k]);
        log_rho[k] = p.log_rho;
        c.jz_per_n[k] = p.jz_per_n;
        c.jx_plus_per_n[k] = p.jx_plus_per_n;
        c.jx_minus_per_n[k] = -p.jx_plus_per_n;
    }
    c.beta = micro_beta_full(energies, log_rho);
    return c;
}

ThermoCurve FullModel::curve_serial(const std::vector<double>& grid) const {
    return curve(grid, false);
}

ThermoCurve FullModel::curve_omp(const std::vector<double>& grid) const {
    return curve(grid, true);
}

std::vector<double> micro_beta_full(const std::vector<double>& energies,
                                    const std::vector<double>& log_rho) {
    const std::size_t n = energies.size();
    if (log_rho.size() != n) throw std::invalid_argument("micro_beta_full: size mismatch");
    std::vector<double> beta(n, kNaN);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t a = k > 0 ? k - 1 : k;
        const std::size_t b = k + 1 < n ? k + 1 : k;
        if (a == b) continue;
        const double dE = energies[b] - energies[a];
        if (std::isfinite(log_rho[a]) && std::isfinite(log_rho[b]) && dE > 0.0)
            beta[k] = (log_rho[b] - log_rho[a]) / dE;
    }
    return beta;
}

}  // namespace dicke::micro
