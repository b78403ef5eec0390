#include "dicke/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace dicke::csv {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    for (int prec = 1; prec <= 16; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_sector_curve(std::ostream& out, const sector::SectorCurve& curve) {
    out << "E_over_j,rho,jz_over_j,jx_plus_over_j,beta\n";
    for (std::size_t k = 0; k < curve.e_over_j.size(); ++k)
        out << format_double(curve.e_over_j[k]) << ',' << format_double(curve.rho[k]) << ','
            << format_double(curve.jz_over_j[k]) << ','
            << format_double(curve.jx_plus_over_j[k]) << ',' << format_double(curve.beta[k])
            << '\n';
}

void write_thermo_curve(std::ostream& out, const micro::ThermoCurve& curve) {
    out << "E_per_N,beta,jz_per_N,jx_plus_per_N,jx_minus_per_N,ensemble\n";
    const std::string tag = micro::ensemble_name(curve.ensemble);
    for (std::size_t k = 0; k < curve.e_per_n.size(); ++k)
        out << format_double(curve.e_per_n[k]) << ',' << format_double(curve.beta[k]) << ','
            << format_double(curve.jz_per_n[k]) << ','
            << format_double(curve.jx_plus_per_n[k]) << ','
            << format_double(curve.jx_minus_per_n[k]) << ',' << tag << '\n';
}

void write_histogram(std::ostream& out, const std::vector<diag::HistogramRow>& rows) {
    out << "e_per_n_bin_center,jz_per_n,jx_plus_per_n,jx_minus_per_n,count_weighted\n";
    for (const auto& r : rows)
        out << format_double(r.e_per_n_center) << ',' << format_double(r.jz_per_n) << ','
            << format_double(r.jx_plus_per_n) << ',' << format_double(r.jx_minus_per_n) << ','
            << format_double(r.weight) << '\n';
}

void write_scaling_table(std::ostream& out, const std::vector<scaling::ScalingRow>& rows) {
    out << "n_atoms,delta_e_jz,delta_e_jx,delta_jz\n";
    for (const auto& r : rows)
        out << r.n_atoms << ',' << format_double(r.delta_e_jz) << ','
            << format_double(r.delta_e_jx) << ',' << format_double(r.delta_jz) << '\n';
}

void write_critical_point(std::ostream& out, const canonical::CriticalPoint& cp) {
    out << "beta_c=" << format_double(cp.beta_c) << '\n'
        << "e_c_per_atom=" << format_double(cp.e_c_per_atom) << '\n'
        << "jz_c_per_atom=" << format_double(cp.jz_c_per_atom) << '\n';
}

void write_fit_summary(std::ostream& out, const scaling::PowerLawFit& fit) {
    out << "alpha=" << format_double(fit.alpha) << '\n'
        << "stderr=" << format_double(fit.alpha_stderr) << '\n'
        << "rms=" << format_double(fit.rms) << '\n';
}

}  // namespace dicke::csv
