#include "qps/phase_space.hpp"

#include <stdexcept>

namespace qps {

PhaseSpace::PhaseSpace(PrimeDim dim, int n_qudits) : dim_(dim), n_qudits_(n_qudits) {
    if (n_qudits < 1) throw std::invalid_argument("PhaseSpace: n_qudits must be >= 1");
    const int d = dim_.value();
    hilbert_dim_ = 1;
    n_sites_ = 1;
    for (int a = 0; a < n_qudits; ++a) {
        hilbert_dim_ *= d;
        n_sites_ *= d * d;
    }
    const int nc = n_coords();
    coords_.resize(static_cast<std::size_t>(n_sites_) * nc);
    for (int idx = 0; idx < n_sites_; ++idx) {
        int rem = idx;
        for (int i = nc - 1; i >= 0; --i) {
            coords_[static_cast<std::size_t>(idx) * nc + i] = rem % d;
            rem /= d;
        }
    }
}

int PhaseSpace::index_of(std::span<const int> coords) const {
    if (static_cast<int>(coords.size()) != n_coords()) {
        throw std::invalid_argument("PhaseSpace: coordinate count does not match the lattice");
    }
    int idx = 0;
    for (int c : coords) idx = idx * d() + dim_.reduce(c);
    return idx;
}

std::span<const int> PhaseSpace::coords_of(int index) const {
    return {coords_.data() + static_cast<std::size_t>(index) * n_coords(),
            static_cast<std::size_t>(n_coords())};
}

PhaseVector PhaseSpace::point_at(int index) const {
    auto c = coords_of(index);
    return PhaseVector(dim_, std::vector<int>(c.begin(), c.end()));
}

int PhaseSpace::add(int a, int b) const {
    const int* ca = coords_.data() + static_cast<std::size_t>(a) * n_coords();
    const int* cb = coords_.data() + static_cast<std::size_t>(b) * n_coords();
    int idx = 0;
    for (int i = 0; i < n_coords(); ++i) {
        int s = ca[i] + cb[i];
        if (s >= d()) s -= d();
        idx = idx * d() + s;
    }
    return idx;
}

int PhaseSpace::sub(int a, int b) const {
    const int* ca = coords_.data() + static_cast<std::size_t>(a) * n_coords();
    const int* cb = coords_.data() + static_cast<std::size_t>(b) * n_coords();
    int idx = 0;
    for (int i = 0; i < n_coords(); ++i) {
        int s = ca[i] - cb[i];
        if (s < 0) s += d();
        idx = idx * d() + s;
    }
    return idx;
}

int PhaseSpace::neg(int a) const { return sub(0, a); }

int PhaseSpace::scale(int a, int factor) const {
    const int* ca = coords_.data() + static_cast<std::size_t>(a) * n_coords();
    int idx = 0;
    for (int i = 0; i < n_coords(); ++i) {
        idx = idx * d() + dim_.reduce(static_cast<std::int64_t>(ca[i]) * factor);
    }
    return idx;
}

int PhaseSpace::symplectic_indexed(int a, int b) const {
    const int* ca = coords_.data() + static_cast<std::size_t>(a) * n_coords();
    const int* cb = coords_.data() + static_cast<std::size_t>(b) * n_coords();
    std::int64_t acc = 0;
    for (int q = 0; q < n_qudits_; ++q) {
        acc += static_cast<std::int64_t>(ca[2 * q]) * cb[2 * q + 1] -
               static_cast<std::int64_t>(ca[2 * q + 1]) * cb[2 * q];
    }
    return dim_.reduce(acc);
}

}  // namespace qps
