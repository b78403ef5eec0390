#include "dicke/model.hpp"

#include <cmath>

namespace dicke {

double effective_coupling(const ModelParams& params, const SectorId& sector) {
    params.validate();
    if (sector.n_atoms() != params.n_atoms)
        throw std::domain_error("sector does not belong to this N");
    return params.lambda * std::sqrt(static_cast<double>(sector.twice_j()) / params.n_atoms);
}

double critical_coupling_sector(const ModelParams& params, const SectorId& sector) {
    params.validate();
    if (sector.n_atoms() != params.n_atoms)
        throw std::domain_error("sector does not belong to this N");
    if (sector.twice_j() == 0)
        throw std::domain_error("j = 0 sector: no ESQPT at any coupling");
    return std::sqrt(params.n_atoms * params.omega * params.omega0 / (4.0 * sector.twice_j()));
}

std::pair<double, double> sector_critical_energies(const SectorId& sector) {
    return {-sector.j(), sector.j()};
}

void require_unit_frequencies(const ModelParams& params) {
    if (params.omega != 1.0 || params.omega0 != 1.0)
        throw std::domain_error(
            "semiclassical microcanonical formulas require omega = omega0 = 1");
}

}  // namespace dicke
