#pragma once

#include <string>
#include <vector>

#include "cpe/integrators.hpp"

namespace cpe {

/// Known manufactured cases: "constant" (v = 0, sigma = p = 1) and "A-osc"
///   v     = (e^-t cos(pi z) cos x, 0)
///   sigma = 1 + 0.1 e^-t cos(pi z)
///   p     = 1 + 0.1 e^-t cos x
std::vector<std::string> manufactured_cases();

/// Exact state at time t sampled on the grid. Unknown ids throw UsageFault.
State manufactured_state(const std::string& id, const Grid& grid, double t);

/// Exact time derivative of the manufactured state.
StateTendency manufactured_time_derivative(const std::string& id, const Grid& grid, double t);

/// Closed-form regularized tendency of the exact state.
StateTendency manufactured_tendency(const std::string& id, const Grid& grid, double t,
                                    const PhysParams& params);

/// Forcing d/dt u* - tendency(u*) evaluated in closed form at the stage time.
Forcing manufactured_forcing(const std::string& id, const PhysParams& params);

}  // namespace cpe
