#include "fns/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fns {

namespace {
void check_axis(int n, double L, const char* axis) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(std::string("grid: n") + axis + " must be even and >= 4, got " + std::to_string(n));
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument(std::string("grid: L") + axis + " must be positive, got " + std::to_string(L));
}
} // namespace

Grid::Grid(int nx_, int ny_, int nz_, double Lx_, double Ly_, double Lz_)
    : nx(nx_), ny(ny_), nz(nz_), Lx(Lx_), Ly(Ly_), Lz(Lz_) {
    check_axis(nx, Lx, "x");
    check_axis(ny, Ly, "y");
    check_axis(nz, Lz, "z");
}

Grid Grid::cube(int n, double L) { return Grid(n, n, n, L, L, L); }

double Grid::min_length() const { return std::min({Lx, Ly, Lz}); }

double Grid::kx(int m) const { return 2.0 * std::numbers::pi * signed_index(m, nx) / Lx; }
double Grid::ky(int m) const { return 2.0 * std::numbers::pi * signed_index(m, ny) / Ly; }
double Grid::kz(int m) const { return 2.0 * std::numbers::pi * signed_index(m, nz) / Lz; }

double Grid::kx_deriv(int m) const { return (m == nx / 2) ? 0.0 : kx(m); }
double Grid::ky_deriv(int m) const { return (m == ny / 2) ? 0.0 : ky(m); }
double Grid::kz_deriv(int m) const { return (m == nz / 2) ? 0.0 : kz(m); }

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (!(a == b))
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

} // namespace fns
