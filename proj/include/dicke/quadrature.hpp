#ifndef DICKE_QUADRATURE_HPP
#define DICKE_QUADRATURE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dicke::quad {

// 15-point Gauss-Kronrod pair on [-1, 1].
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.000000000000000000000000000000000e+00, 2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01, 5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01, 8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01, 9.914553711208126392068546975263285e-01};
inline constexpr std::array<double, 8> kronrod_weights = {
    2.094821410847278280129991748917143e-01, 2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01, 1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01, 1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02, 2.293532201052922496373200805896959e-02};
inline constexpr std::array<double, 4> gauss_weights = {
    4.179591836734693877551020408163265e-01, 3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01, 1.294849661688696932706114326790820e-01};

struct GkResult {
    double value = 0.0;
    double error = 0.0;
};

template <typename F>
GkResult gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = gauss_weights[0] * fc;
    double kron = kronrod_weights[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = h * kronrod_nodes[i];
        const double fs = f(c - dx) + f(c + dx);
        kron += kronrod_weights[i] * fs;
        if (i % 2 == 0) gauss += gauss_weights[i / 2] * fs;
    }
    GkResult r;
    r.value = kron * h;
    r.error = std::abs((kron - gauss) * h);
    return r;
}

// Adaptive bisection driven by the GK15 error estimate. Tolerates integrable
// endpoint singularities (sqrt-type) via depth-limited refinement.
template <typename F>
double adaptive(F&& f, double a, double b, double abs_tol = 1e-10, double rel_tol = 1e-8,
                int max_depth = 48) {
    struct Seg {
        double a, b;
        GkResult r;
        int depth;
    };
    if (!(b > a)) return 0.0;
    std::vector<Seg> stack;
    stack.push_back({a, b, gk15(f, a, b), 0});
    double total = 0.0;
    double remaining_scale = std::abs(stack.front().r.value) + abs_tol;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        const double tol = abs_tol * (s.b - s.a) / (b - a) + rel_tol * remaining_scale * (s.b - s.a) / (b - a);
        if (s.r.error <= tol || s.depth >= max_depth) {
            total += s.r.value;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        stack.push_back({s.a, m, gk15(f, s.a, m), s.depth + 1});
        stack.push_back({m, s.b, gk15(f, m, s.b), s.depth + 1});
    }
    return total;
}

// Simultaneous adaptive integration of several components sharing one weight
// function; refinement is driven by component 0.
template <std::size_t K, typename F>
std::array<double, K> adaptive_multi(F&& f, double a, double b, double abs_tol = 1e-10,
                                     double rel_tol = 1e-8, int max_depth = 48) {
    using Vec = std::array<double, K>;
    struct Seg {
        double a, b;
        Vec kron;
        double err0;
        int depth;
    };
    auto eval = [&f](double a0, double b0) {
        const double c = 0.5 * (a0 + b0);
        const double h = 0.5 * (b0 - a0);
        Vec kron{};
        double gauss0 = 0.0;
        const Vec fc = f(c);
        for (std::size_t k = 0; k < K; ++k) kron[k] = kronrod_weights[0] * fc[k];
        gauss0 = gauss_weights[0] * fc[0];
        for (int i = 1; i < 8; ++i) {
            const double dx = h * kronrod_nodes[i];
            const Vec fl = f(c - dx);
            const Vec fr = f(c + dx);
            for (std::size_t k = 0; k < K; ++k) kron[k] += kronrod_weights[i] * (fl[k] + fr[k]);
            if (i % 2 == 0) gauss0 += gauss_weights[i / 2] * (fl[0] + fr[0]);
        }
        Seg s;
        s.a = a0;
        s.b = b0;
        for (std::size_t k = 0; k < K; ++k) s.kron[k] = kron[k] * h;
        s.err0 = std::abs((kron[0] - gauss0) * h);
        s.depth = 0;
        return s;
    };
    Vec total{};
    if (!(b > a)) return total;
    std::vector<Seg> stack;
    stack.push_back(eval(a, b));
    const double scale = std::abs(stack.front().kron[0]) + abs_tol;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        const double frac = (s.b - s.a) / (b - a);
        const double tol = abs_tol * frac + rel_tol * scale * frac;
        if (s.err0 <= tol || s.depth >= max_depth) {
            for (std::size_t k = 0; k < K; ++k) total[k] += s.kron[k];
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        Seg left = eval(s.a, m);
        Seg right = eval(m, s.b);
        left.depth = right.depth = s.depth + 1;
        stack.push_back(left);
        stack.push_back(right);
    }
    return total;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) {
        nodes.resize(n);
        weights.resize(n);
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                const double dx = p0 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
    }
};

inline double log_sum_exp(const std::vector<double>& args) {
    if (args.empty()) throw std::invalid_argument("log_sum_exp: empty input");
    double m = args.front();
    for (double a : args)
        if (a > m) m = a;
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double a : args) s += std::exp(a - m);
    return m + std::log(s);
}

// log(sinh x) without overflow for large x.
inline double log_sinh(double x) {
    return x + std::log1p(-std::exp(-2.0 * x)) - M_LN2;
}

// log(2 cosh x), stable for large |x|.
inline double log_2cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax));
}

}  // namespace dicke::quad

#endif
