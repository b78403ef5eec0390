#include "dicke/canonical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "dicke/quadrature.hpp"

namespace dicke::canonical {

namespace {

// 60 decades below the integrand peak is treated as zero
constexpr double kLogCut = 60.0 * M_LN10;

double theta_of(double y, const ModelParams& p, double epsilon) {
    const double s = epsilon + 4.0 * p.lambda * y;
    return std::sqrt(p.omega0 * p.omega0 + s * s);
}

// Composite Gauss-Legendre log-integral of f on [a, b].
double log_integral(const std::function<double(double)>& f, double a, double b, int panels,
                    int nodes_per_panel) {
    static thread_local int cached_n = -1;
    static thread_local std::vector<double> xs, ws;
    if (cached_n != nodes_per_panel) {
        quad::GaussLegendre gl(nodes_per_panel);
        xs = gl.nodes;
        ws = gl.weights;
        cached_n = nodes_per_panel;
    }
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(panels) * nodes_per_panel);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double half = 0.5 * h;
        const double mid = lo + half;
        for (int i = 0; i < nodes_per_panel; ++i)
            terms.push_back(f(mid + half * xs[i]) + std::log(ws[i] * half));
    }
    return quad::log_sum_exp(terms);
}

// Expand [0, cut] until the (even) integrand has fallen kLogCut below its max.
double find_cut(const std::function<double(double)>& f, double start) {
    double cut = start;
    double fmax = f(0.0);
    for (int it = 0; it < 200; ++it) {
        double m = fmax;
        const int n_scan = 64;
        for (int i = 1; i <= n_scan; ++i) m = std::max(m, f(cut * i / n_scan));
        if (f(cut) < m - kLogCut) return cut;
        fmax = m;
        cut *= 2.0;
    }
    throw std::runtime_error("canonical integrand does not decay; check parameters");
}

}  // namespace

double psi(double y, double beta, const ModelParams& p, double epsilon) {
    return -beta * p.omega * y * y + quad::log_2cosh(0.5 * beta * theta_of(y, p, epsilon));
}

double psi_prime(double y, double beta, const ModelParams& p, double epsilon) {
    const double th = theta_of(y, p, epsilon);
    const double s = epsilon + 4.0 * p.lambda * y;
    const double dth = 4.0 * p.lambda * s / th;
    return -2.0 * beta * p.omega * y + 0.5 * beta * std::tanh(0.5 * beta * th) * dth;
}

double psi_second(double y, double beta, const ModelParams& p, double epsilon) {
    const double th = theta_of(y, p, epsilon);
    const double s = epsilon + 4.0 * p.lambda * y;
    const double dth = 4.0 * p.lambda * s / th;
    const double d2th = 16.0 * p.lambda * p.lambda * p.omega0 * p.omega0 / (th * th * th);
    const double t = std::tanh(0.5 * beta * th);
    const double sech2 = 1.0 - t * t;
    return -2.0 * beta * p.omega +
           0.5 * beta * (0.5 * beta * sech2 * dth * dth + t * d2th);
}

double partition_jmax(const ModelParams& p, double beta) {
    p.validate();
    if (!(beta > 0.0)) throw std::domain_error("partition_jmax: beta must be > 0");
    const double n = p.n_atoms;
    auto exponent = [&](double x) {
        const double th = std::sqrt(p.omega0 * p.omega0 + 4.0 * p.lambda * p.lambda * x * x / n);
        // sum_{m=-N/2}^{N/2} e^{-beta m th} = sinh(beta(N+1)th/2)/sinh(beta th/2)
        return -beta * p.omega * x * x + quad::log_sinh(0.5 * beta * (n + 1.0) * th) -
               quad::log_sinh(0.5 * beta * th);
    };
    const double cut = find_cut(exponent, std::sqrt(n) + 1.0);
    const double li = log_integral(exponent, 0.0, cut, 32, 32) + M_LN2;  // even integrand
    return -0.5 * std::log(M_PI * beta * p.omega) + li;
}

double partition_full(const ModelParams& p, double beta, double epsilon) {
    p.validate();
    if (!(beta > 0.0)) throw std::domain_error("partition_full: beta must be > 0");
    const double n = p.n_atoms;
    auto exponent = [&](double y) { return n * psi(y, beta, p, epsilon); };
    auto folded = [&](double y) { return std::max(exponent(y), exponent(-y)); };
    const double cut = find_cut(folded, (4.0 * p.lambda + p.omega0) / p.omega + 1.0);
    const double li = log_integral(exponent, -cut, cut, 64, 32);
    return 0.5 * std::log(n) - 0.5 * std::log(M_PI * beta * p.omega) + li;
}

LaplaceState laplace_maximize(double beta, const ModelParams& p, double epsilon) {
    p.validate();
    if (!(beta > 0.0)) throw std::domain_error("laplace_maximize: beta must be > 0");
    const double span = (4.0 * p.lambda + p.omega0 + std::abs(epsilon)) / p.omega + 1.0;
    // coarse global scan, then Newton on Psi' with bisection safeguard
    const int n_scan = 4096;
    double best_y = 0.0, best_f = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n_scan; ++i) {
        const double y = -span + 2.0 * span * i / n_scan;
        const double f = psi(y, beta, p, epsilon);
        if (f > best_f) {
            best_f = f;
            best_y = y;
        }
    }
    double y = best_y;
    const double h = 2.0 * span / n_scan;
    double lo = y - h, hi = y + h;
    for (int it = 0; it < 200; ++it) {
        const double d1 = psi_prime(y, beta, p, epsilon);
        if (std::abs(d1) < 1e-12) break;
        const double d2 = psi_second(y, beta, p, epsilon);
        double step = d2 != 0.0 ? -d1 / d2 : 0.0;
        double y_new = y + step;
        if (!(y_new > lo && y_new < hi) || d2 >= 0.0) y_new = 0.5 * (lo + hi);
        if (psi_prime(lo, beta, p, epsilon) * psi_prime(y_new, beta, p, epsilon) <= 0.0)
            hi = y_new;
        else
            lo = y_new;
        y = y_new;
    }
    LaplaceState st;
    st.beta = beta;
    st.y0 = y;
    if (epsilon == 0.0) {
        st.y0 = std::abs(y) < 1e-9 ? 0.0 : std::abs(y);  // positive representative
        st.broken = st.y0 != 0.0;
    } else {
        st.broken = std::abs(y) > 1e-9;
    }
    const double y_rep = epsilon == 0.0 ? st.y0 : y;
    st.y0 = y_rep;
    st.psi_value = psi(y_rep, beta, p, epsilon);
    st.psi_second = psi_second(y_rep, beta, p, epsilon);
    st.near_critical = std::abs(st.psi_second) < 1e-10;
    return st;
}

double solve_gap_equation(double beta, const ModelParams& p) {
    p.validate();
    const double lam_c = 0.5 * std::sqrt(p.omega * p.omega0);
    if (p.lambda <= lam_c)
        throw std::domain_error("gap equation: normal phase only (lambda <= lambda_c)");
    const double slope = p.omega * p.omega0 / (4.0 * p.lambda * p.lambda);
    auto f = [&](double z) { return std::tanh(0.5 * beta * p.omega0 * z) - slope * z; };
    if (f(1.0) <= 0.0)
        throw std::domain_error("gap equation: no nontrivial solution (beta <= beta_c)");
    double lo = 1.0, hi = 1.0 / slope;  // z <= 4 lambda^2/(omega omega0)
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) < 1e-12) return mid;
        if (fm > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

CriticalPoint critical_beta(const ModelParams& p) {
    p.validate();
    const double lam_c = 0.5 * std::sqrt(p.omega * p.omega0);
    if (p.lambda < lam_c)
        throw std::domain_error("no thermal phase transition (lambda < lambda_c)");
    if (p.lambda == lam_c)
        throw std::domain_error("phase transition only at beta -> infinity (QPT at lambda = lambda_c)");
    CriticalPoint cp;
    const double arg = p.omega * p.omega0 / (4.0 * p.lambda * p.lambda);
    cp.beta_c = 2.0 / p.omega0 * std::atanh(arg);
    cp.e_c_per_atom = -p.omega * p.omega0 * p.omega0 / (8.0 * p.lambda * p.lambda);
    cp.jz_c_per_atom = -p.omega * p.omega0 / (8.0 * p.lambda * p.lambda);
    return cp;
}

namespace {

Observables envelope(double beta, const ModelParams& p, double epsilon) {
    const LaplaceState st = laplace_maximize(beta, p, epsilon);
    const double th = theta_of(st.y0, p, epsilon);
    const double t = std::tanh(0.5 * beta * th);
    Observables ob;
    ob.e_per_n = p.omega * st.y0 * st.y0 - 0.5 * th * t;
    ob.jz_per_n = -0.5 * t * p.omega0 / th;
    ob.jx_per_n = -0.5 * t * (epsilon + 4.0 * p.lambda * st.y0) / th;
    return ob;
}

// Neville extrapolation of samples (eps_i, f_i) to eps = 0.
double extrapolate_to_zero(const std::vector<double>& eps, std::vector<double> f) {
    const std::size_t n = eps.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            f[i] = (eps[i + m] * f[i] - eps[i] * f[i + 1]) / (eps[i + m] - eps[i]);
    return f[0];
}

}  // namespace

Observables laplace_observables(double beta, const ModelParams& p, EpsilonMode mode) {
    if (mode == EpsilonMode::zero) {
        Observables ob = envelope(beta, p, 0.0);
        ob.jx_per_n = 0.0;  // both saddle branches populated; odd observable averages out
        return ob;
    }
    const std::vector<double> eps = {1e-6, 1e-7, 1e-8};
    std::vector<double> e(3), jz(3), jx(3);
    for (int i = 0; i < 3; ++i) {
        const Observables ob = envelope(beta, p, eps[i]);
        e[i] = ob.e_per_n;
        jz[i] = ob.jz_per_n;
        jx[i] = ob.jx_per_n;
    }
    return {extrapolate_to_zero(eps, e), extrapolate_to_zero(eps, jz),
            extrapolate_to_zero(eps, jx)};
}

double laplace_beta_of_energy(double e_per_n, const ModelParams& p) {
    if (!(e_per_n < 0.0))
        throw std::domain_error("canonical energies satisfy E/N < 0");
    double lo = 1e-9, hi = 1.0;
    auto e_of = [&](double b) { return laplace_observables(b, p, EpsilonMode::zero).e_per_n; };
    while (e_of(hi) > e_per_n) {
        hi *= 2.0;
        if (hi > 1e9) throw std::domain_error("energy below the canonical ground energy");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (e_of(mid) > e_per_n)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi);
}

namespace {

double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double stable_derivative(const std::function<double(double)>& f, double x, double h) {
    const double d1 = central_diff(f, x, h);
    const double d2 = central_diff(f, x, 0.5 * h);
    const double scale = std::max({std::abs(d1), std::abs(d2), 1.0});
    if (std::abs(d1 - d2) > 1e-4 * scale)
        throw std::runtime_error("derivative of log Z unstable under step halving");
    return (4.0 * d2 - d1) / 3.0;  // Richardson
}

}  // namespace

std::vector<double> energy_canonical(const std::function<double(double)>& log_z_of_beta,
                                     const std::vector<double>& beta_grid, double step) {
    std::vector<double> out;
    out.reserve(beta_grid.size());
    for (double b : beta_grid) out.push_back(-stable_derivative(log_z_of_beta, b, step));
    return out;
}

std::vector<double> jz_canonical(const std::function<double(double)>& log_z_of_omega0,
                                 double beta, const std::vector<double>& omega0_grid,
                                 double step) {
    std::vector<double> out;
    out.reserve(omega0_grid.size());
    for (double w0 : omega0_grid)
        out.push_back(-stable_derivative(log_z_of_omega0, w0, step) / beta);
    return out;
}

}  // namespace dicke::canonical
