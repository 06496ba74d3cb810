#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace binlat {

using complex = std::complex<double>;

// Hopping V, on-site mismatch epsilon and static force F of the binary lattice
//   H = -V sum_n (|n><n+1| + h.c.) + sum_n (F n + epsilon/2 (-1)^n) |n><n|.
// A negative epsilon is allowed; it describes the even-parity Rabi chain.
class LatticeParams {
public:
    LatticeParams(double V, double epsilon, double F);

    double V() const { return V_; }
    double epsilon() const { return epsilon_; }
    double F() const { return F_; }

private:
    double V_;
    double epsilon_;
    double F_;
};

// Open (hard-wall) window of sites n in [-N, N].
class Truncation {
public:
    static constexpr int default_half_width = 40;

    explicit Truncation(int half_width = default_half_width);

    int half_width() const { return half_width_; }
    int first_site() const { return -half_width_; }
    int last_site() const { return half_width_; }
    std::size_t dimension() const { return static_cast<std::size_t>(2 * half_width_ + 1); }
    bool contains(int site) const { return site >= -half_width_ && site <= half_width_; }

    friend bool operator==(const Truncation&, const Truncation&) = default;

private:
    int half_width_;
};

// Real symmetric tridiagonal matrix; row k belongs to site offset + k.
struct TridiagonalMatrix {
    int offset = 0;
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t dimension() const { return diag.size(); }
    int first_site() const { return offset; }
    int last_site() const { return offset + static_cast<int>(diag.size()) - 1; }
    // Max absolute row sum.
    double inf_norm() const;

    friend bool operator==(const TridiagonalMatrix&, const TridiagonalMatrix&) = default;
};

// Amplitudes c_n on a contiguous range of sites starting at `offset`.
class StateVector {
public:
    StateVector() = default;
    StateVector(int offset, std::vector<complex> amplitudes);

    // The Wannier state |site> on the window of `trunc`.
    static StateVector wannier(int site, const Truncation& trunc);

    int offset() const { return offset_; }
    std::size_t size() const { return amplitudes_.size(); }
    int first_site() const { return offset_; }
    int last_site() const { return offset_ + static_cast<int>(amplitudes_.size()) - 1; }
    bool contains(int site) const { return site >= first_site() && site <= last_site(); }

    // Amplitude at `site`, zero outside the window.
    complex at(int site) const;
    complex& operator[](int site);

    const std::vector<complex>& amplitudes() const { return amplitudes_; }
    double norm_squared() const;
    bool is_normalized(double tol = 1e-12) const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    int offset_ = 0;
    std::vector<complex> amplitudes_;
};

double onsite_energy(int site, const LatticeParams& params);

TridiagonalMatrix build_lattice_hamiltonian(const LatticeParams& params, const Truncation& trunc);

enum class Ladder { raise, lower, number };

// Result of a shift that may push amplitude past the window edge.
struct ShiftResult {
    StateVector state;
    double leaked_norm = 0.0; // sum of |c|^2 that left the window
};

// E+ |n> = |n+1>, E- |n> = |n-1>, E0 |n> = n |n>, restricted to the input's window.
ShiftResult apply_ladder(Ladder which, const StateVector& state);

// E+^{2m}: shifts every amplitude by 2m sites.
ShiftResult translate_even(const StateVector& state, int m);

} // namespace binlat
