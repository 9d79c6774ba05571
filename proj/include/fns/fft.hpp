#pragma once

#include <complex>
#include <vector>

#include "fns/grid.hpp"

namespace fns::fft {

/// Unnormalized in-place c2c transforms on a full (nz,ny,nx) cube,
/// x contiguous. Plans are cached per shape and created with
/// FFTW_ESTIMATE so results are reproducible across runs.
void forward_raw(const Grid& g, std::complex<double>* data);
void backward_raw(const Grid& g, std::complex<double>* data);

} // namespace fns::fft
