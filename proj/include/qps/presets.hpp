#pragma once

#include <string>
#include <vector>

#include "qps/linalg.hpp"
#include "qps/weyl.hpp"

namespace qps {

// Named Hamiltonian presets, as dimensionless generators:
//   diag012  level ladder x = diag(0, ..., d-1), one qudit
//   xplusp   x + p, one qudit
//   xx       x1 x2 coupling, two qudits
struct PresetHamiltonian {
    HamiltonianSpec spec;
    int n_qudits = 1;
};

PresetHamiltonian preset_hamiltonian(const std::string& name, const PrimeDim& dim);
std::vector<std::string> preset_names();

// State presets: "p<k>" momentum eigenstate, "x<k>" position eigenstate.
// A comma-separated list builds the tensor product, subsystem-1-major.
ComplexVector preset_state(const std::string& name, const PrimeDim& dim);

}  // namespace qps
