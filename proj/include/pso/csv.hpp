#ifndef PSO_CSV_HPP
#define PSO_CSV_HPP

#include "pso/engine.hpp"
#include "pso/initialization.hpp"
#include "pso/sociometry.hpp"
#include "pso/trajectory.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace pso {

/// Shortest round-trip decimal form, '.' separator, locale-independent.
std::string format_double(double v);

/// Header `iteration,best_objective,diversity`, LF line endings.
void write_trace_csv(std::ostream &os, const std::vector<TraceRow> &trace);

/// Header `iteration,particle,dim,x,xm`.
void write_dump_csv(std::ostream &os, const std::vector<DumpRow> &dump);

/// Header `omega,phi,rate,kind,convergent`; convergent as 0/1.
void write_grid_csv(std::ostream &os, const std::vector<GridCell> &grid);

/// One row per particle: `particle,x1_0..,x0_0..,xm_0..`.
void write_init_preview_csv(std::ostream &os, const std::vector<ParticleInit> &init,
                            std::size_t dimension);

/// m rows of 0/1 cells; the diagonal carries X when the particle includes
/// itself.
void write_connectivity_csv(std::ostream &os, const ConnectivityMatrix &matrix);

} // namespace pso

#endif // PSO_CSV_HPP
