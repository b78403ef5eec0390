#ifndef DICKE_CSV_HPP
#define DICKE_CSV_HPP

#include <ostream>
#include <string>
#include <vector>

#include "dicke/canonical.hpp"
#include "dicke/diag.hpp"
#include "dicke/micro.hpp"
#include "dicke/scaling.hpp"
#include "dicke/sector.hpp"

namespace dicke::csv {

// Shortest decimal that round-trips the IEEE-754 double ("%.17g" upper bound,
// trimmed); NaN rendered as "nan".
std::string format_double(double v);

void write_sector_curve(std::ostream& out, const sector::SectorCurve& curve);
void write_thermo_curve(std::ostream& out, const micro::ThermoCurve& curve);
void write_histogram(std::ostream& out, const std::vector<diag::HistogramRow>& rows);
void write_scaling_table(std::ostream& out, const std::vector<scaling::ScalingRow>& rows);
void write_critical_point(std::ostream& out, const canonical::CriticalPoint& cp);
void write_fit_summary(std::ostream& out, const scaling::PowerLawFit& fit);

}  // namespace dicke::csv

#endif
