#ifndef DICKE_MODEL_HPP
#define DICKE_MODEL_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace dicke {

// Couplings and system size of H = omega0 Jz + omega a+a + (2 lambda/sqrt(N)) Jx (a + a+) + epsilon Jx.
struct ModelParams {
    double omega = 1.0;   // photon frequency
    double omega0 = 1.0;  // atomic splitting
    double lambda = 1.5;  // atom-field coupling
    int n_atoms = 100000;
    double epsilon = 0.0; // symmetry-breaking field on Jx

    void validate() const {
        if (!(omega > 0.0)) throw std::domain_error("omega must be > 0");
        if (!(omega0 > 0.0)) throw std::domain_error("omega0 must be > 0");
        if (!(lambda >= 0.0)) throw std::domain_error("lambda must be >= 0");
        if (n_atoms < 1) throw std::domain_error("n_atoms must be >= 1");
        if (!(epsilon >= 0.0)) throw std::domain_error("epsilon must be >= 0");
    }
};

// One invariant subspace of fixed total angular momentum j. Stored as 2j so
// half-integer sectors (odd N) stay exact.
class SectorId {
  public:
    SectorId(int n_atoms, int twice_j) : twice_j_(twice_j), n_atoms_(n_atoms) {
        if (twice_j < 0 || twice_j > n_atoms)
            throw std::domain_error("sector: need 0 <= 2j <= N");
        if ((n_atoms - twice_j) % 2 != 0)
            throw std::domain_error("sector: 2j must have the parity of N");
    }

    static SectorId max_sector(int n_atoms) { return SectorId(n_atoms, n_atoms); }

    int twice_j() const { return twice_j_; }
    int n_atoms() const { return n_atoms_; }
    double j() const { return 0.5 * twice_j_; }
    double x() const { return 0.5 * twice_j_ / n_atoms_; }

  private:
    int twice_j_;
    int n_atoms_;
};

// lambda_eff = lambda * sqrt(2j/N); the sector Hamiltonian is the j = N/2 one
// with this coupling.
double effective_coupling(const ModelParams& params, const SectorId& sector);

// lambda_c^(j) = sqrt(N omega omega0 / (8j)). Throws for j = 0 (no ESQPT in
// that sector at any coupling).
double critical_coupling_sector(const ModelParams& params, const SectorId& sector);

// (E_c, E_*) = (-j, +j) in the omega = omega0 = 1 convention.
std::pair<double, double> sector_critical_energies(const SectorId& sector);

// Guard used by the semiclassical modules, whose formulas are derived at
// omega = omega0 = 1 only.
void require_unit_frequencies(const ModelParams& params);

}  // namespace dicke

#endif
