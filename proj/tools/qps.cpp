// Command-line front end: Wigner functions, propagators, path sums,
// commensurability reports, entanglement tables, and the verification suite.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qps/entanglement.hpp"
#include "qps/io.hpp"
#include "qps/presets.hpp"
#include "qps/pseudo_classical.hpp"
#include "qps/verify.hpp"

namespace {

using namespace qps;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path p(output_path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("QPS_OUTPUT_DIR")) {
            p = std::filesystem::path(dir) / p;
        }
    }
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot open output file " + p.string());
    f << text;
}

io::json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file " + path);
    return io::json::parse(f);
}

int infer_n_qudits(Eigen::Index rows, const PrimeDim& dim) {
    int n = 0;
    Eigen::Index size = 1;
    while (size < rows) {
        size *= dim.value();
        ++n;
    }
    if (size != rows || n == 0) {
        throw std::invalid_argument("matrix dimension " + std::to_string(rows) +
                                    " is not a power of d=" + std::to_string(dim.value()));
    }
    return n;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) out.push_back(std::stod(token));
    }
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_double_list(text)) out.push_back(static_cast<int>(std::llround(v)));
    return out;
}

struct HamiltonianChoice {
    ComplexMatrix matrix;
    int n_qudits = 1;
};

HamiltonianChoice load_hamiltonian(const std::string& preset, const std::string& file,
                                   const PrimeDim& dim) {
    if (!file.empty()) {
        const ComplexMatrix m = io::matrix_from_json(read_json_file(file));
        HamiltonianSpec spec(m);  // validates hermiticity
        return {spec.matrix, infer_n_qudits(m.rows(), dim)};
    }
    const PresetHamiltonian p = preset_hamiltonian(preset, dim);
    return {p.spec.matrix, p.n_qudits};
}

std::string wigner_table(const WignerFunction& w) {
    std::ostringstream os;
    os << std::setprecision(10);
    if (w.space.n_qudits() == 1) {
        const int d = w.space.d();
        os << "m\\n";
        for (int n = 0; n < d; ++n) os << "\t" << n;
        os << "\n";
        for (int m = 0; m < d; ++m) {
            os << m;
            for (int n = 0; n < d; ++n) os << "\t" << w.values(m * d + n);
            os << "\n";
        }
    } else {
        for (int q = 0; q < w.space.n_qudits(); ++q) os << "m" << (q + 1) << "\tn" << (q + 1) << "\t";
        os << "value\n";
        for (int site = 0; site < w.space.n_sites(); ++site) {
            for (int c : w.space.coords_of(site)) os << c << "\t";
            os << w.values(site) << "\n";
        }
    }
    os << "sum = " << w.sum() << "\n";
    os << "negativity = " << negativity(w) << "\n";
    return os.str();
}

// ---- wigner ----------------------------------------------------------------

struct WignerArgs {
    int d = 3;
    std::string state = "p0";
    std::string state_file;
    std::string evolve;
    std::string evolve_file;
    double chi_t = 0.0;
    std::string format = "table";
    std::string output;
};

int run_wigner(const WignerArgs& args) {
    const PrimeDim dim(args.d);

    ComplexMatrix rho;
    int n_qudits = 1;
    if (!args.state_file.empty()) {
        rho = io::matrix_from_json(read_json_file(args.state_file));
        n_qudits = infer_n_qudits(rho.rows(), dim);
    } else {
        const ComplexVector psi = preset_state(args.state, dim);
        rho = density_from_state(psi);
        n_qudits = infer_n_qudits(psi.size(), dim);
    }

    if (!args.evolve.empty() || !args.evolve_file.empty()) {
        const HamiltonianChoice h = load_hamiltonian(args.evolve, args.evolve_file, dim);
        if (h.matrix.rows() != rho.rows()) {
            throw std::invalid_argument("Hamiltonian dimension does not match the state");
        }
        const ComplexMatrix u = hermitian_expm(h.matrix, Complex(0.0, -args.chi_t));
        rho = u * rho * u.adjoint();
    }

    const PhaseSpace space(dim, n_qudits);
    const WignerFunction w = wigner_function(rho, space);

    if (args.format == "table") {
        emit(wigner_table(w), args.output);
    } else if (args.format == "csv") {
        emit(io::wigner_to_csv(w), args.output);
    } else {
        emit(io::wigner_to_json(w).dump(2) + "\n", args.output);
    }
    return 0;
}

// ---- propagate ---------------------------------------------------------------

struct PropagateArgs {
    int d = 3;
    std::string hamiltonian = "diag012";
    std::string hamiltonian_file;
    double chi_t = 1.0;
    std::string form = "both";
    std::string state;
    std::string format = "json";
    std::string output;
    double tol = 1e-10;
};

int run_propagate(const PropagateArgs& args) {
    const PrimeDim dim(args.d);
    const HamiltonianChoice h = load_hamiltonian(args.hamiltonian, args.hamiltonian_file, dim);
    const PhaseSpace space(dim, h.n_qudits);
    const ComplexMatrix u = hermitian_expm(h.matrix, Complex(0.0, -args.chi_t));

    KernelDiagnostics diag;
    std::optional<WignerKernel> kernel;
    double form_difference = 0.0;
    if (args.form == "trace") {
        kernel = kernel_trace_form(u, space, &diag);
    } else if (args.form == "fourier") {
        kernel = kernel_fourier_form(u, space, &diag);
    } else {
        const WignerKernel trace_form = kernel_trace_form(u, space);
        kernel = kernel_fourier_form(u, space, &diag);
        form_difference = (trace_form.entries - kernel->entries).cwiseAbs().maxCoeff();
    }

    const bool checks_pass = diag.max_imag < args.tol && diag.max_column_sum_error < args.tol &&
                             form_difference < args.tol;

    io::json j = io::kernel_to_json(*kernel);
    j["chi_t"] = args.chi_t;
    j["form"] = args.form;
    j["diagnostics"] = {{"max_imag", diag.max_imag},
                        {"max_column_sum_error", diag.max_column_sum_error},
                        {"form_difference", form_difference},
                        {"tolerance", args.tol},
                        {"pass", checks_pass}};
    if (!args.state.empty()) {
        const ComplexVector psi = preset_state(args.state, dim);
        if (infer_n_qudits(psi.size(), dim) != h.n_qudits) {
            throw std::invalid_argument("state and Hamiltonian qudit counts differ");
        }
        const WignerFunction w0 = wigner_function(density_from_state(psi), space);
        const WignerFunction wt = apply_kernel(*kernel, w0);
        j["initial_wigner"] = io::wigner_to_json(w0)["values"];
        j["evolved_wigner"] = io::wigner_to_json(wt)["values"];
        j["evolved_negativity"] = negativity(wt);
    }

    if (args.format == "table") {
        std::ostringstream os;
        os << std::setprecision(6) << std::scientific;
        os << "kernel " << space.n_sites() << "x" << space.n_sites() << " at chi_t=" << args.chi_t
           << " (" << args.form << ")\n"
           << "max_imag = " << diag.max_imag << "\n"
           << "max_column_sum_error = " << diag.max_column_sum_error << "\n"
           << "form_difference = " << form_difference << "\n"
           << "checks " << (checks_pass ? "pass" : "FAIL") << "\n";
        emit(os.str(), args.output);
    } else {
        emit(j.dump(2) + "\n", args.output);
    }
    return checks_pass ? 0 : 1;
}

// ---- path-integral -----------------------------------------------------------

struct PathIntegralArgs {
    int d = 3;
    std::string preset = "diag012";
    std::string hamiltonian_file;
    double chi_t = 1.0;
    int num_slices = 1;
    std::string mu0;
    std::string mu_n;
    bool compare_exact = false;
    double tol = 1e-10;
    std::uint64_t max_terms = 200'000'000;
    std::string output;
};

int run_path_integral(const PathIntegralArgs& args) {
    const PrimeDim dim(args.d);
    const HamiltonianChoice h = load_hamiltonian(args.preset, args.hamiltonian_file, dim);
    const PhaseSpace space(dim, h.n_qudits);
    const RealVector h_w = real_phase_space_function(h.matrix, space);

    const bool endpoints = !args.mu0.empty() || !args.mu_n.empty();
    if (endpoints && (args.mu0.empty() || args.mu_n.empty())) {
        throw std::invalid_argument("--mu0 and --muN must be given together");
    }

    std::optional<WignerKernel> exact;
    if (args.compare_exact) {
        exact = kernel_trace_form(hermitian_expm(h.matrix, Complex(0.0, -args.chi_t)), space);
    }

    if (endpoints) {
        const PhaseVector p0(dim, parse_int_list(args.mu0));
        const PhaseVector pn(dim, parse_int_list(args.mu_n));
        const PathConfig cfg{args.num_slices, args.chi_t, p0, pn};

        Complex value;
        try {
            value = path_sum_entry(h_w, cfg, space, args.max_terms);
        } catch (const BudgetExceeded& e) {
            std::cerr << "note: " << e.what() << "\n";
            const WignerKernel composed = path_sum_kernel(h_w, args.num_slices, args.chi_t, space);
            value = composed.entries(space.index_of(pn), space.index_of(p0));
        }

        io::PathSumRecord record;
        record.num_slices = args.num_slices;
        record.total_time = args.chi_t;
        record.mu0.assign(p0.coords().begin(), p0.coords().end());
        record.mu_n.assign(pn.coords().begin(), pn.coords().end());
        record.value = value;
        if (exact) {
            record.exact_value = exact->entries(space.index_of(pn), space.index_of(p0));
            record.abs_error = std::abs(value - Complex(record.exact_value, 0.0));
        }
        emit(io::path_sum_record_to_json(record).dump(2) + "\n", args.output);
        return (!args.compare_exact || record.abs_error < args.tol) ? 0 : 1;
    }

    const WignerKernel composed = path_sum_kernel(h_w, args.num_slices, args.chi_t, space);
    double max_err = 0.0;
    if (exact) max_err = (composed.entries - exact->entries).cwiseAbs().maxCoeff();

    io::json j;
    j["N"] = args.num_slices;
    j["t"] = args.chi_t;
    j["dim"] = args.d;
    j["n_qudits"] = h.n_qudits;
    if (exact) {
        j["max_abs_error"] = max_err;
        j["tolerance"] = args.tol;
        j["pass"] = max_err < args.tol;
    }
    emit(j.dump(2) + "\n", args.output);
    return (!args.compare_exact || max_err < args.tol) ? 0 : 1;
}

// ---- commensurability ----------------------------------------------------------

struct CommensurabilityArgs {
    int d = 3;
    std::string a = "1";
    std::string b;
    double tau = 1.0;
    double offset = 0.0;
    std::string output;
};

int run_commensurability(const CommensurabilityArgs& args) {
    const PrimeDim dim(args.d);
    const std::vector<double> a = parse_double_list(args.a);
    std::vector<double> b(a.size(), 0.0);
    if (!args.b.empty()) b = parse_double_list(args.b);
    if (a.size() != b.size()) throw std::invalid_argument("--a and --b must have equal length");

    LinearHamiltonian h;
    for (std::size_t q = 0; q < a.size(); ++q) h.coeffs.emplace_back(a[q], b[q]);
    h.offset = args.offset;

    const ShiftKernelCheck check = verify_shift_kernel(h, args.tau, dim);
    emit(io::commensurability_to_json(check).dump(2) + "\n", args.output);
    return check.consistent ? 0 : 1;
}

// ---- entanglement ---------------------------------------------------------------

struct EntanglementArgs {
    std::string chi_t_list;
    int num_slices = 4;
    std::string format = "table";
    std::string output;
    double tol = 1e-10;
};

int run_entanglement(const EntanglementArgs& args) {
    std::vector<double> chi_ts;
    if (args.chi_t_list.empty()) {
        const double pi = std::numbers::pi;
        chi_ts = {0.25, 0.5, pi / 2, 2 * pi / 3, pi, 4 * pi / 3, 2 * pi};
    } else {
        chi_ts = parse_double_list(args.chi_t_list);
    }

    const std::vector<EntanglementRecord> records = entanglement_table(chi_ts, args.num_slices);
    bool pass = true;
    for (const auto& r : records) {
        pass = pass && std::abs(r.linear_entropy - linear_entropy_closed_form(r.chi_t)) < args.tol;
    }

    if (args.format == "csv") {
        emit(io::entanglement_to_csv(records), args.output);
    } else if (args.format == "json") {
        emit(io::entanglement_to_json(records).dump(2) + "\n", args.output);
    } else {
        std::ostringstream os;
        os << "chi_t      source            purity        S_L           err_vs_closed\n";
        for (const auto& r : records) {
            os << std::left << std::setw(11) << std::setprecision(6) << r.chi_t << std::setw(18)
               << r.source << std::setw(14) << std::setprecision(8) << r.purity << std::setw(14)
               << r.linear_entropy << std::setprecision(3) << std::scientific
               << std::abs(r.linear_entropy - linear_entropy_closed_form(r.chi_t))
               << std::defaultfloat << "\n";
        }
        emit(os.str(), args.output);
    }
    return pass ? 0 : 1;
}

// ---- verify ---------------------------------------------------------------------

struct VerifyArgs {
    std::string only;
    int d = 0;
    double tol = 1e-10;
    int symplectic_scale = -2;
};

int run_verify(const VerifyArgs& args) {
    verify::Options options;
    if (!args.only.empty()) options.only = args.only;
    if (args.d != 0) options.dim_filter = args.d;
    options.tolerance = args.tol;
    options.fourier_symplectic_scale = args.symplectic_scale;

    const auto results = verify::run_checks(options);
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(20) << r.name
                  << std::right << " (" << std::fixed << std::setprecision(2) << r.seconds
                  << " s)  " << r.detail << "\n"
                  << std::defaultfloat;
    }
    const bool ok = verify::all_passed(results);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete phase-space dynamics for odd-prime qudits"};
    app.require_subcommand(1);

    WignerArgs wigner_args;
    auto* wigner_cmd = app.add_subcommand("wigner", "Wigner function of a state, optionally evolved");
    wigner_cmd->add_option("--d", wigner_args.d, "Hilbert-space dimension (odd prime)");
    wigner_cmd->add_option("--state", wigner_args.state, "state preset p<k>/x<k>, comma list for qudits");
    wigner_cmd->add_option("--state-file", wigner_args.state_file, "density matrix JSON file");
    wigner_cmd->add_option("--evolve", wigner_args.evolve, "Hamiltonian preset (diag012, xplusp, xx)");
    wigner_cmd->add_option("--evolve-file", wigner_args.evolve_file, "Hamiltonian JSON file");
    wigner_cmd->add_option("--chi-t", wigner_args.chi_t, "dimensionless evolution time");
    wigner_cmd->add_option("--format", wigner_args.format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    wigner_cmd->add_option("--output", wigner_args.output, "output path (default stdout)");

    PropagateArgs propagate_args;
    auto* propagate_cmd = app.add_subcommand("propagate", "build the Wigner evolution kernel");
    propagate_cmd->add_option("--d", propagate_args.d, "Hilbert-space dimension (odd prime)");
    propagate_cmd->add_option("--hamiltonian", propagate_args.hamiltonian, "Hamiltonian preset");
    propagate_cmd->add_option("--hamiltonian-file", propagate_args.hamiltonian_file,
                              "Hamiltonian JSON file");
    propagate_cmd->add_option("--chi-t", propagate_args.chi_t, "dimensionless evolution time");
    propagate_cmd->add_option("--form", propagate_args.form, "trace, fourier, or both")
        ->check(CLI::IsMember({"trace", "fourier", "both"}));
    propagate_cmd->add_option("--state", propagate_args.state, "apply the kernel to this preset state");
    propagate_cmd->add_option("--format", propagate_args.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    propagate_cmd->add_option("--output", propagate_args.output, "output path (default stdout)");
    propagate_cmd->add_option("--tol", propagate_args.tol, "consistency tolerance");

    PathIntegralArgs path_args;
    auto* path_cmd = app.add_subcommand("path-integral", "iterated short-time kernels and path sums");
    path_cmd->add_option("--d", path_args.d, "Hilbert-space dimension (odd prime)");
    path_cmd->add_option("--preset", path_args.preset, "Hamiltonian preset");
    path_cmd->add_option("--hamiltonian-file", path_args.hamiltonian_file, "Hamiltonian JSON file");
    path_cmd->add_option("--chi-t", path_args.chi_t, "total dimensionless time");
    path_cmd->add_option("--N", path_args.num_slices, "number of time slices")->check(CLI::PositiveNumber);
    path_cmd->add_option("--mu0", path_args.mu0, "initial point, comma list (m1,n1,...)");
    path_cmd->add_option("--muN", path_args.mu_n, "final point, comma list (m1,n1,...)");
    path_cmd->add_flag("--compare-exact", path_args.compare_exact, "compare against the exact kernel");
    path_cmd->add_option("--tol", path_args.tol, "comparison tolerance");
    path_cmd->add_option("--max-terms", path_args.max_terms, "enumeration budget for the direct sum");
    path_cmd->add_option("--output", path_args.output, "output path (default stdout)");

    CommensurabilityArgs comm_args;
    auto* comm_cmd = app.add_subcommand("commensurability", "classify a linear Hamiltonian step");
    comm_cmd->add_option("--d", comm_args.d, "Hilbert-space dimension (odd prime)");
    comm_cmd->add_option("--a", comm_args.a, "position-coordinate rates, comma list per qudit");
    comm_cmd->add_option("--b", comm_args.b, "momentum-coordinate rates, comma list per qudit");
    comm_cmd->add_option("--tau", comm_args.tau, "time step")->check(CLI::PositiveNumber);
    comm_cmd->add_option("--offset", comm_args.offset, "constant offset c (inert)");
    comm_cmd->add_option("--output", comm_args.output, "output path (default stdout)");

    EntanglementArgs ent_args;
    auto* ent_cmd = app.add_subcommand("entanglement", "two-qutrit linear-entropy table");
    ent_cmd->add_option("--chi-t-list", ent_args.chi_t_list, "comma list of chi*t values");
    ent_cmd->add_option("--N", ent_args.num_slices, "time slices for the path-integral route")
        ->check(CLI::PositiveNumber);
    ent_cmd->add_option("--format", ent_args.format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    ent_cmd->add_option("--output", ent_args.output, "output path (default stdout)");
    ent_cmd->add_option("--tol", ent_args.tol, "route-agreement tolerance");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
    verify_cmd->add_option("--only", verify_args.only, "run a single named check");
    verify_cmd->add_option("--d", verify_args.d, "restrict the dimension sweep");
    verify_cmd->add_option("--tol", verify_args.tol, "override the default 1e-10 gate");
    verify_cmd->add_option("--symplectic-scale", verify_args.symplectic_scale,
                           "fault-injection knob, production value -2")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (wigner_cmd->parsed()) return run_wigner(wigner_args);
        if (propagate_cmd->parsed()) return run_propagate(propagate_args);
        if (path_cmd->parsed()) return run_path_integral(path_args);
        if (comm_cmd->parsed()) return run_commensurability(comm_args);
        if (ent_cmd->parsed()) return run_entanglement(ent_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
