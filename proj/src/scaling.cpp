#include "dicke/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "dicke/canonical.hpp"

namespace dicke::scaling {

namespace {

std::vector<double> make_grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (double e = lo; e <= hi + 0.5 * step; e += step) g.push_back(e);
    return g;
}

}  // namespace

JzPrecursor find_precursor_jz(const ModelParams& params, double e_lo, double e_hi,
                              double e_step) {
    micro::FullModel model(params);
    const std::vector<double> grid = make_grid(e_lo, e_hi, e_step);
    std::vector<double> jz(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(grid.size()); ++k)
        jz[k] = model.point(grid[k] * params.n_atoms).jz_per_n;
    std::size_t best = 0;
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (jz[k] < jz[best]) best = k;
    if (best == 0 || best + 1 == grid.size())
        throw std::runtime_error("Jz precursor: dip vanished (no interior minimum)");
    // zoom refinement: the dip is cusp-like, so a single quadratic step is
    // only O(h) accurate; shrink the bracket instead
    const double n = params.n_atoms;
    double lo = grid[best - 1], mid = grid[best], hi = grid[best + 1];
    double f_mid = jz[best];
    while (hi - lo > 1e-7) {
        const double l = 0.5 * (lo + mid), r = 0.5 * (mid + hi);
        const double fl = model.point(l * n).jz_per_n;
        const double fr = model.point(r * n).jz_per_n;
        if (fl <= f_mid && fl <= fr) {
            hi = mid;
            mid = l;
            f_mid = fl;
        } else if (fr <= f_mid) {
            lo = mid;
            mid = r;
            f_mid = fr;
        } else {
            lo = l;
            hi = r;
        }
    }
    return JzPrecursor{mid, f_mid};
}

double find_precursor_jx(const ModelParams& params, double threshold, double e_lo,
                         double e_hi, double e_step) {
    micro::FullModel model(params);
    const double n = params.n_atoms;
    const auto jx = [&](double e_per_n) { return model.point(e_per_n * n).jx_plus_per_n; };
    const std::vector<double> grid = make_grid(e_lo, e_hi, e_step);
    std::vector<double> v(grid.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < static_cast<long>(grid.size()); ++k) v[k] = jx(grid[k]);
    std::size_t cross = grid.size();
    for (std::size_t k = 0; k < grid.size(); ++k)
        if (v[k] < threshold) {
            cross = k;
            break;
        }
    if (cross == grid.size())
        throw std::runtime_error("Jx precursor: curve never drops below threshold");
    if (cross == 0)
        throw std::runtime_error("Jx precursor: curve entirely below threshold");
    double lo = grid[cross - 1], hi = grid[cross];
    for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        (jx(mid) < threshold ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

PowerLawFit fit_powerlaw(const std::vector<double>& n_values,
                         const std::vector<double>& deltas) {
    const std::size_t m = n_values.size();
    if (m != deltas.size() || m < 3)
        throw std::invalid_argument("power-law fit needs >= 3 (N, delta) pairs");
    std::vector<double> lx(m), ly(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (!(deltas[k] > 0.0))
            throw std::domain_error("power-law fit: delta <= 0 (precursor crossed asymptote)");
        lx[k] = std::log(n_values[k]);
        ly[k] = std::log(deltas[k]);
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < m; ++k) {
        sx += lx[k];
        sy += ly[k];
        sxx += lx[k] * lx[k];
        sxy += lx[k] * ly[k];
    }
    const double det = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / det;
    const double icept = (sy * sxx - sx * sxy) / det;
    PowerLawFit fit;
    fit.alpha = -slope;
    fit.amplitude = std::exp(icept);
    fit.residuals.resize(m);
    double ss = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        fit.residuals[k] = ly[k] - (icept + slope * lx[k]);
        ss += fit.residuals[k] * fit.residuals[k];
    }
    fit.rms = std::sqrt(ss / m);
    fit.alpha_stderr = m > 2 ? std::sqrt(ss / (m - 2) * m / det) : 0.0;
    return fit;
}

std::vector<int> default_n_ladder() { return {1000, 3000, 10000, 30000, 100000}; }

std::vector<ScalingRow> scaling_table(const ModelParams& base, const std::vector<int>& n_ladder,
                                      double jx_threshold) {
    const canonical::CriticalPoint cp = canonical::critical_beta(base);
    std::vector<ScalingRow> rows;
    rows.reserve(n_ladder.size());
    for (int n : n_ladder) {
        ModelParams p = base;
        p.n_atoms = n;
        const JzPrecursor jz = find_precursor_jz(p);
        const double e_jx = find_precursor_jx(p, jx_threshold);
        ScalingRow r;
        r.n_atoms = n;
        r.delta_e_jz = std::abs(jz.e_c_per_n - cp.e_c_per_atom);
        r.delta_e_jx = std::abs(e_jx - cp.e_c_per_atom);
        r.delta_jz = std::abs(jz.jz_min - cp.jz_c_per_atom);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace dicke::scaling
