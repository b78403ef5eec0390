#ifndef DICKE_DIAG_HPP
#define DICKE_DIAG_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "dicke/model.hpp"

namespace dicke::diag {

// Truncated photon (x) spin-j product basis; flat index = n * (2j+1) + m_idx,
// m = -j + m_idx.
struct SectorBasis {
    SectorId sector;
    int n_max;

    SectorBasis(const SectorId& s, int n_max_photons) : sector(s), n_max(n_max_photons) {
        if (n_max < 1) throw std::domain_error("photon truncation n_max must be >= 1");
    }

    int spin_dim() const { return sector.twice_j() + 1; }
    int dimension() const { return (n_max + 1) * spin_dim(); }
    int index(int n, int m_idx) const { return n * spin_dim() + m_idx; }
};

// Eigenvalues and per-eigenstate expectation values of one sector.
struct SpectrumCache {
    // fingerprint
    double omega, omega0, lambda, epsilon;
    int n_atoms, twice_j, n_max;

    std::vector<double> eigenvalues;  // ascending
    std::vector<double> jz;
    std::vector<double> jx;
    std::vector<double> parity;

    bool fingerprint_matches(const ModelParams& p, const SectorBasis& basis) const;
};

Eigen::MatrixXd build_hamiltonian(const SectorBasis& basis, const ModelParams& params);

SpectrumCache diagonalize_sector(const SectorBasis& basis, const ModelParams& params);

// Flat-file cache (CSV with a fingerprint header). load returns false on
// missing file or fingerprint mismatch.
void save_cache(const SpectrumCache& cache, const std::string& path);
bool load_cache(SpectrumCache& cache, const std::string& path, const ModelParams& params,
                const SectorBasis& basis);

// Diagonalize every sector of N atoms (cache_dir empty: no caching).
// Sectors run in parallel; each writes its own cache file.
std::vector<SpectrumCache> diagonalize_all(const ModelParams& params, int n_max,
                                           const std::string& cache_dir = "",
                                           bool* cache_hit_all = nullptr);

// Degeneracy-weighted per-bin averages over eigenstates.
struct HistogramRow {
    double e_per_n_center;
    double jz_per_n;
    double jx_plus_per_n;  // split mode: <Jx> >= 0 states; else all states
    double jx_minus_per_n; // split mode: <Jx> < 0 states; NaN otherwise
    double weight;
};

std::vector<HistogramRow> histogram_observables(const std::vector<SpectrumCache>& caches,
                                                int n_atoms, double bin_width_per_n,
                                                bool split_by_jx_sign);

}  // namespace dicke::diag

#endif
