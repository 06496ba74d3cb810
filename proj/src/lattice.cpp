#include "binlat/lattice.hpp"

#include "binlat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace binlat {

LatticeParams::LatticeParams(double V, double epsilon, double F) : V_(V), epsilon_(epsilon), F_(F) {
    if (!std::isfinite(V) || !std::isfinite(epsilon) || !std::isfinite(F))
        throw ValidationError("lattice parameters must be finite");
    if (V < 0.0)
        throw ValidationError("hopping V must be >= 0, got " + std::to_string(V));
    if (F <= 0.0)
        throw ValidationError("static force F must be > 0, got " + std::to_string(F));
}

Truncation::Truncation(int half_width) : half_width_(half_width) {
    if (half_width < 1)
        throw ValidationError("truncation half-width must be >= 1, got " + std::to_string(half_width));
}

double TridiagonalMatrix::inf_norm() const {
    double norm = 0.0;
    const std::size_t n = diag.size();
    for (std::size_t k = 0; k < n; ++k) {
        double row = std::abs(diag[k]);
        if (k > 0) row += std::abs(offdiag[k - 1]);
        if (k + 1 < n) row += std::abs(offdiag[k]);
        norm = std::max(norm, row);
    }
    return norm;
}

StateVector::StateVector(int offset, std::vector<complex> amplitudes)
    : offset_(offset), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::wannier(int site, const Truncation& trunc) {
    if (!trunc.contains(site))
        throw ValidationError("site " + std::to_string(site) + " outside truncation window");
    StateVector s(trunc.first_site(), std::vector<complex>(trunc.dimension(), 0.0));
    s[site] = 1.0;
    return s;
}

complex StateVector::at(int site) const {
    if (!contains(site)) return 0.0;
    return amplitudes_[static_cast<std::size_t>(site - offset_)];
}

complex& StateVector::operator[](int site) {
    return amplitudes_.at(static_cast<std::size_t>(site - offset_));
}

double StateVector::norm_squared() const {
    double sum = 0.0;
    for (const auto& c : amplitudes_) sum += std::norm(c);
    return sum;
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

double onsite_energy(int site, const LatticeParams& params) {
    const double stagger = (site % 2 == 0) ? 1.0 : -1.0;
    return params.F() * site + (params.epsilon() / 2) * stagger;
}

TridiagonalMatrix build_lattice_hamiltonian(const LatticeParams& params, const Truncation& trunc) {
    TridiagonalMatrix h;
    h.offset = trunc.first_site();
    h.diag.reserve(trunc.dimension());
    for (int n = trunc.first_site(); n <= trunc.last_site(); ++n) h.diag.push_back(onsite_energy(n, params));
    h.offdiag.assign(trunc.dimension() - 1, -params.V());
    return h;
}

namespace {

ShiftResult shift(const StateVector& state, int by) {
    ShiftResult out{StateVector(state.offset(), std::vector<complex>(state.size(), 0.0)), 0.0};
    for (int n = state.first_site(); n <= state.last_site(); ++n) {
        const complex c = state.at(n);
        if (out.state.contains(n + by))
            out.state[n + by] = c;
        else
            out.leaked_norm += std::norm(c);
    }
    return out;
}

} // namespace

ShiftResult apply_ladder(Ladder which, const StateVector& state) {
    switch (which) {
    case Ladder::raise:
        return shift(state, 1);
    case Ladder::lower:
        return shift(state, -1);
    case Ladder::number: {
        ShiftResult out{state, 0.0};
        for (int n = state.first_site(); n <= state.last_site(); ++n) out.state[n] *= static_cast<double>(n);
        return out;
    }
    }
    return {state, 0.0};
}

ShiftResult translate_even(const StateVector& state, int m) { return shift(state, 2 * m); }

} // namespace binlat
