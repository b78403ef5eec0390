#include "dicke/degeneracy.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke::degen {

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

}  // namespace

BigInt degeneracy_exact(int n_atoms, int twice_j) {
    if (twice_j < 0 || twice_j > n_atoms || (n_atoms - twice_j) % 2 != 0)
        throw std::domain_error("degeneracy_exact: invalid (N, 2j)");
    const int k = (n_atoms - twice_j) / 2;
    const BigInt num = BigInt(1 + twice_j) * binomial(n_atoms, k);
    const BigInt den = 1 + (twice_j + n_atoms) / 2;
    if (num % den != 0)
        throw std::logic_error("degeneracy_exact: non-integer result");
    return num / den;
}

double log_degeneracy(int n_atoms, double x) {
    if (n_atoms < 2) throw std::domain_error("log_degeneracy: need N >= 2");
    if (x < 0.0 || x > 0.5) throw std::domain_error("log_degeneracy: x outside [0, 1/2]");
    const double n = n_atoms;
    return std::log(1.0 + 2.0 * n * x) + std::lgamma(n + 1.0) -
           std::lgamma(1.0 + 0.5 * n - n * x) - std::lgamma(2.0 + 0.5 * n + n * x);
}

double degeneracy_argmax(int n_atoms) {
    if (n_atoms < 4) throw std::domain_error("degeneracy_argmax: need N >= 4");
    // golden-section search; log g is unimodal on [0, 1/2]
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = 0.0, b = 0.5;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = log_degeneracy(n_atoms, c);
    double fd = log_degeneracy(n_atoms, d);
    while (b - a > 1e-11) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = log_degeneracy(n_atoms, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = log_degeneracy(n_atoms, d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace dicke::degen
