#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <string>

#include "qps/entanglement.hpp"
#include "qps/propagator.hpp"
#include "qps/pseudo_classical.hpp"

namespace qps::io {

using json = nlohmann::json;

// CSV with header m1,n1,...,value, rows in lattice order.
std::string wigner_to_csv(const WignerFunction& w);
// {"dim": d, "n_qudits": n, "values": [...]} with the flat lattice order.
json wigner_to_json(const WignerFunction& w);

// {"dim": d, "n_qudits": n, "entries": [...]} row-major, entries[final][initial].
json kernel_to_json(const WignerKernel& g);

json commensurability_to_json(const ShiftKernelCheck& check);

struct PathSumRecord {
    int num_slices = 0;
    double total_time = 0.0;
    std::vector<int> mu0;
    std::vector<int> mu_n;
    Complex value;
    double exact_value = 0.0;
    double abs_error = 0.0;
};
json path_sum_record_to_json(const PathSumRecord& record);

std::string entanglement_to_csv(std::span<const EntanglementRecord> records);
json entanglement_to_json(std::span<const EntanglementRecord> records);

// Matrix file format {"dim": d, "entries": [[re, im], ...]} row-major.
json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const json& j);

}  // namespace qps::io
