#include "dicke/diag.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "dicke/degeneracy.hpp"

namespace dicke::diag {

namespace {

double ladder(double j, double m) {  // <j,m+1|J+|j,m>
    return std::sqrt(j * (j + 1.0) - m * (m + 1.0));
}

}  // namespace

bool SpectrumCache::fingerprint_matches(const ModelParams& p, const SectorBasis& basis) const {
    return omega == p.omega && omega0 == p.omega0 && lambda == p.lambda &&
           epsilon == p.epsilon && n_atoms == p.n_atoms &&
           twice_j == basis.sector.twice_j() && n_max == basis.n_max;
}

Eigen::MatrixXd build_hamiltonian(const SectorBasis& basis, const ModelParams& params) {
    params.validate();
    const int dim = basis.dimension();
    const int sd = basis.spin_dim();
    const double j = basis.sector.j();
    const double coupling = 2.0 * params.lambda / std::sqrt(static_cast<double>(params.n_atoms));
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n <= basis.n_max; ++n) {
        for (int mi = 0; mi < sd; ++mi) {
            const double m = -j + mi;
            const int a = basis.index(n, mi);
            h(a, a) = params.omega * n + params.omega0 * m;
            if (mi + 1 < sd) {
                const double jp = 0.5 * ladder(j, m);  // Jx matrix element
                // static symmetry-breaking field
                const int b = basis.index(n, mi + 1);
                h(a, b) += params.epsilon * jp;
                h(b, a) += params.epsilon * jp;
                // photon-mediated coupling (a + a+)
                if (n + 1 <= basis.n_max) {
                    const int c = basis.index(n + 1, mi + 1);
                    const double v = coupling * jp * std::sqrt(n + 1.0);
                    h(a, c) += v;
                    h(c, a) += v;
                }
                if (n - 1 >= 0) {
                    const int c = basis.index(n - 1, mi + 1);
                    const double v = coupling * jp * std::sqrt(static_cast<double>(n));
                    h(a, c) += v;
                    h(c, a) += v;
                }
            }
        }
    }
    return h;
}

SpectrumCache diagonalize_sector(const SectorBasis& basis, const ModelParams& params) {
    const Eigen::MatrixXd h = build_hamiltonian(basis, params);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        std::ostringstream os;
        os << "eigensolver failed to converge in sector 2j=" << basis.sector.twice_j();
        throw std::runtime_error(os.str());
    }
    const int dim = basis.dimension();
    const int sd = basis.spin_dim();
    const double j = basis.sector.j();
    SpectrumCache cache;
    cache.omega = params.omega;
    cache.omega0 = params.omega0;
    cache.lambda = params.lambda;
    cache.epsilon = params.epsilon;
    cache.n_atoms = params.n_atoms;
    cache.twice_j = basis.sector.twice_j();
    cache.n_max = basis.n_max;
    cache.eigenvalues.resize(dim);
    cache.jz.resize(dim);
    cache.jx.resize(dim);
    cache.parity.resize(dim);
    for (int k = 0; k < dim; ++k) {
        cache.eigenvalues[k] = solver.eigenvalues()(k);
        const auto v = solver.eigenvectors().col(k);
        double jz = 0.0, jx = 0.0, par = 0.0;
        for (int n = 0; n <= basis.n_max; ++n) {
            for (int mi = 0; mi < sd; ++mi) {
                const double m = -j + mi;
                const double c = v(basis.index(n, mi));
                jz += m * c * c;
                par += ((n + mi) % 2 == 0 ? 1.0 : -1.0) * c * c;
                if (mi + 1 < sd) jx += c * v(basis.index(n, mi + 1)) * ladder(j, m);
            }
        }
        cache.jz[k] = jz;
        cache.jx[k] = jx;
        cache.parity[k] = par;
    }
    return cache;
}

void save_cache(const SpectrumCache& cache, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "# omega=%.17g omega0=%.17g lambda=%.17g epsilon=%.17g n_atoms=%d twice_j=%d "
                  "n_max=%d\n",
                  cache.omega, cache.omega0, cache.lambda, cache.epsilon, cache.n_atoms,
                  cache.twice_j, cache.n_max);
    out << buf << "index,eigenvalue,jz,jx,parity\n";
    for (std::size_t k = 0; k < cache.eigenvalues.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g,%.17g\n", k, cache.eigenvalues[k],
                      cache.jz[k], cache.jx[k], cache.parity[k]);
        out << buf;
    }
}

bool load_cache(SpectrumCache& cache, const std::string& path, const ModelParams& params,
                const SectorBasis& basis) {
    std::ifstream in(path);
    if (!in) return false;
    std::string header;
    if (!std::getline(in, header)) return false;
    SpectrumCache c;
    if (std::sscanf(header.c_str(),
                    "# omega=%lg omega0=%lg lambda=%lg epsilon=%lg n_atoms=%d twice_j=%d "
                    "n_max=%d",
                    &c.omega, &c.omega0, &c.lambda, &c.epsilon, &c.n_atoms, &c.twice_j,
                    &c.n_max) != 7)
        return false;
    if (!c.fingerprint_matches(params, basis)) return false;
    std::string line;
    std::getline(in, line);  // column header
    while (std::getline(in, line)) {
        std::size_t idx;
        double e, jz, jx, par;
        if (std::sscanf(line.c_str(), "%zu,%lg,%lg,%lg,%lg", &idx, &e, &jz, &jx, &par) != 5)
            return false;
        c.eigenvalues.push_back(e);
        c.jz.push_back(jz);
        c.jx.push_back(jx);
        c.parity.push_back(par);
    }
    if (static_cast<int>(c.eigenvalues.size()) != basis.dimension()) return false;
    cache = std::move(c);
    return true;
}

std::vector<SpectrumCache> diagonalize_all(const ModelParams& params, int n_max,
                                           const std::string& cache_dir, bool* cache_hit_all) {
    params.validate();
    const int n = params.n_atoms;
    std::vector<int> twice_js;
    for (int tj = n % 2; tj <= n; tj += 2) twice_js.push_back(tj);
    std::vector<SpectrumCache> caches(twice_js.size());
    bool all_hit = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : all_hit)
    for (long i = 0; i < static_cast<long>(twice_js.size()); ++i) {
        const SectorBasis basis(SectorId(n, twice_js[i]), n_max);
        std::string path;
        if (!cache_dir.empty()) {
            char name[256];
            std::snprintf(name, sizeof name, "spectrum_N%d_2j%d_nmax%d_lam%.6g_eps%.3g.csv", n,
                          twice_js[i], n_max, params.lambda, params.epsilon);
            path = (std::filesystem::path(cache_dir) / name).string();
        }
        bool hit = false;
        if (!path.empty()) hit = load_cache(caches[i], path, params, basis);
        if (!hit) {
            caches[i] = diagonalize_sector(basis, params);
            if (!path.empty()) save_cache(caches[i], path);
        }
        all_hit = all_hit && hit;
    }
    if (cache_hit_all) *cache_hit_all = all_hit;
    return caches;
}

std::vector<HistogramRow> histogram_observables(const std::vector<SpectrumCache>& caches,
                                                int n_atoms, double bin_width_per_n,
                                                bool split_by_jx_sign) {
    if (caches.empty()) throw std::invalid_argument("histogram: no sector spectra");
    if (!(bin_width_per_n > 0.0)) throw std::invalid_argument("histogram: bin width must be > 0");
    struct Acc {
        double w = 0.0, jz = 0.0;
        double wp = 0.0, jxp = 0.0;
        double wm = 0.0, jxm = 0.0;
    };
    std::map<long, Acc> bins;
    for (const auto& c : caches) {
        if (c.n_atoms != n_atoms)
            throw std::invalid_argument("histogram: sector cache from a different N");
        const double g = std::exp(degen::log_degeneracy(n_atoms, 0.5 * c.twice_j / n_atoms));
        for (std::size_t k = 0; k < c.eigenvalues.size(); ++k) {
            const double e = c.eigenvalues[k] / n_atoms;
            const long idx = static_cast<long>(std::floor(e / bin_width_per_n));
            Acc& a = bins[idx];
            a.w += g;
            a.jz += g * c.jz[k] / n_atoms;
            if (c.jx[k] >= 0.0) {
                a.wp += g;
                a.jxp += g * c.jx[k] / n_atoms;
            } else {
                a.wm += g;
                a.jxm += g * c.jx[k] / n_atoms;
            }
        }
    }
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<HistogramRow> rows;
    rows.reserve(bins.size());
    for (const auto& [idx, a] : bins) {
        HistogramRow r;
        r.e_per_n_center = (idx + 0.5) * bin_width_per_n;
        r.weight = a.w;
        r.jz_per_n = a.w > 0.0 ? a.jz / a.w : nan;
        if (split_by_jx_sign) {
            r.jx_plus_per_n = a.wp > 0.0 ? a.jxp / a.wp : nan;
            r.jx_minus_per_n = a.wm > 0.0 ? a.jxm / a.wm : nan;
        } else {
            r.jx_plus_per_n = a.w > 0.0 ? (a.jxp + a.jxm) / a.w : nan;
            r.jx_minus_per_n = nan;
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace dicke::diag
