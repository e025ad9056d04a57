#include "qps/io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qps::io {

namespace {

std::string format_value(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

}  // namespace

std::string wigner_to_csv(const WignerFunction& w) {
    std::ostringstream os;
    for (int q = 0; q < w.space.n_qudits(); ++q) {
        os << "m" << (q + 1) << ",n" << (q + 1) << ",";
    }
    os << "value\n";
    for (int site = 0; site < w.space.n_sites(); ++site) {
        for (int c : w.space.coords_of(site)) os << c << ",";
        os << format_value(w.values(site)) << "\n";
    }
    return os.str();
}

json wigner_to_json(const WignerFunction& w) {
    json j;
    j["dim"] = w.space.d();
    j["n_qudits"] = w.space.n_qudits();
    j["values"] = std::vector<double>(w.values.data(), w.values.data() + w.values.size());
    return j;
}

json kernel_to_json(const WignerKernel& g) {
    json j;
    j["dim"] = g.space.d();
    j["n_qudits"] = g.space.n_qudits();
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(g.entries.size()));
    for (Eigen::Index r = 0; r < g.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < g.entries.cols(); ++c) entries.push_back(g.entries(r, c));
    }
    j["entries"] = entries;
    return j;
}

json commensurability_to_json(const ShiftKernelCheck& check) {
    json j;
    j["k_values"]["a"] = check.report.k_a;
    j["k_values"]["b"] = check.report.k_b;
    j["class"] = to_string(check.report.classification);
    json shifts = json::array();
    for (const PhasePoint& s : check.report.shift) shifts.push_back({s.m, s.n});
    j["predicted_shift"] = shifts;
    j["kernel_is_permutation"] = check.kernel_is_permutation;
    j["consistent"] = check.consistent;
    return j;
}

json path_sum_record_to_json(const PathSumRecord& record) {
    json j;
    j["N"] = record.num_slices;
    j["t"] = record.total_time;
    j["mu0"] = record.mu0;
    j["muN"] = record.mu_n;
    j["value"] = {{"re", record.value.real()}, {"im", record.value.imag()}};
    j["exact_value"] = record.exact_value;
    j["abs_error"] = record.abs_error;
    return j;
}

std::string entanglement_to_csv(std::span<const EntanglementRecord> records) {
    std::ostringstream os;
    os << "chi_t,source,purity,linear_entropy,error_vs_closed_form\n";
    for (const auto& r : records) {
        os << format_value(r.chi_t) << "," << r.source << "," << format_value(r.purity) << ","
           << format_value(r.linear_entropy) << ","
           << format_value(std::abs(r.linear_entropy - linear_entropy_closed_form(r.chi_t))) << "\n";
    }
    return os.str();
}

json entanglement_to_json(std::span<const EntanglementRecord> records) {
    json rows = json::array();
    for (const auto& r : records) {
        rows.push_back({{"chi_t", r.chi_t},
                        {"source", r.source},
                        {"purity", r.purity},
                        {"linear_entropy", r.linear_entropy},
                        {"error_vs_closed_form",
                         std::abs(r.linear_entropy - linear_entropy_closed_form(r.chi_t))}});
    }
    return json{{"records", rows}};
}

json matrix_to_json(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix_to_json: square matrix required");
    json entries = json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            entries.push_back({a(r, c).real(), a(r, c).imag()});
        }
    }
    return json{{"dim", a.rows()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("entries")) {
        throw std::invalid_argument("matrix file needs 'dim' and 'entries'");
    }
    const int dim = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (dim < 1 || static_cast<int>(entries.size()) != dim * dim) {
        throw std::invalid_argument("matrix file: entry count does not match dim^2");
    }
    ComplexMatrix a(dim, dim);
    int idx = 0;
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c, ++idx) {
            const auto& e = entries.at(static_cast<std::size_t>(idx));
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("matrix file: entries must be [re, im] pairs");
            }
            a(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        }
    }
    return a;
}

}  // namespace qps::io
