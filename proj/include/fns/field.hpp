#pragma once

#include <array>
#include <complex>
#include <vector>

#include "fns/grid.hpp"

namespace fns {

using Complex = std::complex<double>;

/// Real scalar samples on the grid, x-fastest.
struct ScalarField {
    Grid grid;
    std::vector<double> data;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), data(g.size(), 0.0) {}
    double& operator()(std::size_t idx) { return data[idx]; }
    double operator()(std::size_t idx) const { return data[idx]; }
};

/// Three real components on the grid, x-fastest within each component.
struct RealVectorField {
    Grid grid;
    std::array<std::vector<double>, 3> comp;

    RealVectorField() = default;
    explicit RealVectorField(const Grid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }
    bool all_finite() const;
    /// Pointwise Euclidean magnitude.
    ScalarField magnitude() const;
};

/// Three components of complex Fourier coefficients, full cube, same
/// x-fastest layout as physical storage. Coefficient at slot 0 is the mean.
struct SpectralVectorField {
    Grid grid;
    std::array<std::vector<Complex>, 3> comp;

    SpectralVectorField() = default;
    explicit SpectralVectorField(const Grid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), Complex(0.0, 0.0));
    }
};

struct SpectralScalarField {
    Grid grid;
    std::vector<Complex> data;

    SpectralScalarField() = default;
    explicit SpectralScalarField(const Grid& g) : grid(g), data(g.size(), Complex(0.0, 0.0)) {}
};

} // namespace fns
