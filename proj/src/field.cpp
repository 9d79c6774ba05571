#include "fns/field.hpp"

#include <cmath>

namespace fns {

bool RealVectorField::all_finite() const {
    for (const auto& c : comp)
        for (double v : c)
            if (!std::isfinite(v)) return false;
    return true;
}

ScalarField RealVectorField::magnitude() const {
    ScalarField m(grid);
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i)
        m.data[i] = std::sqrt(comp[0][i] * comp[0][i] + comp[1][i] * comp[1][i] + comp[2][i] * comp[2][i]);
    return m;
}

} // namespace fns
