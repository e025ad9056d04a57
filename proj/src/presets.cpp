#include "qps/presets.hpp"

#include <sstream>
#include <stdexcept>

namespace qps {

PresetHamiltonian preset_hamiltonian(const std::string& name, const PrimeDim& dim) {
    if (name == "diag012") {
        return PresetHamiltonian{HamiltonianSpec(position_operator(dim)), 1};
    }
    if (name == "xplusp") {
        return PresetHamiltonian{HamiltonianSpec(position_operator(dim) + momentum_operator(dim)), 1};
    }
    if (name == "xx") {
        const ComplexMatrix x = position_operator(dim);
        return PresetHamiltonian{HamiltonianSpec(kron(x, x)), 2};
    }
    throw std::invalid_argument("unknown Hamiltonian preset '" + name +
                                "' (known: diag012, xplusp, xx)");
}

std::vector<std::string> preset_names() { return {"diag012", "xplusp", "xx"}; }

namespace {

ComplexVector parse_single_state(const std::string& token, const PrimeDim& dim) {
    if (token.size() < 2 || (token[0] != 'p' && token[0] != 'x')) {
        throw std::invalid_argument("invalid state preset '" + token +
                                    "' (expected p<k> or x<k>)");
    }
    int k = 0;
    try {
        std::size_t pos = 0;
        k = std::stoi(token.substr(1), &pos);
        if (pos + 1 != token.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid state preset '" + token + "' (expected p<k> or x<k>)");
    }
    if (k < 0 || k >= dim.value()) {
        throw std::invalid_argument("state preset '" + token + "' is out of range for d=" +
                                    std::to_string(dim.value()));
    }
    return token[0] == 'p' ? momentum_state(dim, k) : position_state(dim, k);
}

}  // namespace

ComplexVector preset_state(const std::string& name, const PrimeDim& dim) {
    std::vector<ComplexVector> factors;
    std::stringstream ss(name);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) factors.push_back(parse_single_state(token, dim));
    }
    if (factors.empty()) throw std::invalid_argument("empty state preset");

    ComplexVector psi = factors.front();
    for (std::size_t q = 1; q < factors.size(); ++q) {
        ComplexVector next(psi.size() * factors[q].size());
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
            for (Eigen::Index j = 0; j < factors[q].size(); ++j) {
                next(i * factors[q].size() + j) = psi(i) * factors[q](j);
            }
        }
        psi = std::move(next);
    }
    return psi;
}

}  // namespace qps
