#pragma once

#include <ostream>
#include <span>
#include <string>

#include "tnl/closed_form.hpp"
#include "tnl/collocation.hpp"
#include "tnl/hamiltonian.hpp"
#include "tnl/variational.hpp"

namespace tnl {

/// "%.17g": every double written by the tools round-trips exactly.
std::string format_double(double v);

/// Comma-separated, header row, '\n' after every row (including the last).
void write_csv(std::ostream& os, std::span<const std::string> header,
               std::span<const std::span<const double>> columns);

void write_trajectory_csv(std::ostream& os, const Grid& grid, std::span<const double> q,
                          std::span<const double> qdot);
void write_residual_csv(std::ostream& os, const ResidualProfile& profile);
void write_phase_csv(std::ostream& os, const PhasePath& phase);

/// Roots and amplitudes as {"re","im"} pairs plus the basis convention.
std::string solution_to_json(const ClosedFormSolution& sol, int indent = 2);
std::string convergence_to_json(const ConvergenceEstimate& est, int indent = 2);

}  // namespace tnl
