#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace fns {

/// Uniform periodic box discretization shared by all fields.
/// Samples are at x_i = i*Lx/nx etc.; storage is x-fastest.
struct Grid {
    int nx = 0, ny = 0, nz = 0;
    double Lx = 0.0, Ly = 0.0, Lz = 0.0;

    Grid() = default;
    Grid(int nx_, int ny_, int nz_, double Lx_, double Ly_, double Lz_);
    static Grid cube(int n, double L);

    std::size_t size() const { return std::size_t(nx) * ny * nz; }
    std::size_t index(int i, int j, int k) const {
        return std::size_t(i) + std::size_t(nx) * (std::size_t(j) + std::size_t(ny) * k);
    }
    double dx() const { return Lx / nx; }
    double dy() const { return Ly / ny; }
    double dz() const { return Lz / nz; }
    double cell_volume() const { return dx() * dy() * dz(); }
    double volume() const { return Lx * Ly * Lz; }
    double min_length() const;

    /// Signed mode index for FFT slot m: m for m <= n/2, m-n otherwise.
    /// The Nyquist slot m = n/2 maps to +n/2.
    static int signed_index(int m, int n) { return (m <= n / 2) ? m : m - n; }

    /// Wavevector component 2*pi*signed_index/L for FFT slot m on one axis.
    double kx(int m) const;
    double ky(int m) const;
    double kz(int m) const;

    /// First-derivative wavevector: as above but zero at the Nyquist slot,
    /// which keeps spectral derivatives of real fields real.
    double kx_deriv(int m) const;
    double ky_deriv(int m) const;
    double kz_deriv(int m) const;

    bool operator==(const Grid&) const = default;
};

void require_same_grid(const Grid& a, const Grid& b, const char* where);

} // namespace fns
