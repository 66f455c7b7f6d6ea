#pragma once

#include <cstddef>
#include <vector>

#include "ubergraph/errors.hpp"
#include "ubergraph/matrix.hpp"
#include "ubergraph/model.hpp"

namespace ubergraph {

// Eigenvalues of a real symmetric matrix (row-major, n*n entries), sorted in
// descending order.  Uses the cyclic Jacobi rotation method; convergence is
// reached when the off-diagonal Frobenius norm drops below
// 1e-12 * (1 + frobenius_norm(input)).  Throws NotSymmetric when the input
// matrix is not symmetric and NoConvergence when 100 sweeps are not enough.
std::vector<double> symmetric_eigenvalues(const std::vector<double>& entries, std::size_t n);

struct SpectralReport {
    std::vector<double> eigenvalues; // Laplacian spectrum, descending
    std::int64_t trace = 0;          // sum of Laplacian diagonal (= sum of degrees)
    std::vector<double> mu;          // eigenvalues normalised by the trace
    double entropy_bits = 0.0;
};

// Shannon entropy (base 2) of the normalised Laplacian spectrum.  The trace of
// the Laplacian must be positive (DegenerateDistribution otherwise), and every
// eigenvalue must be >= -1e-9 (NegativeEigenvalue otherwise); small negative
// values inside that tolerance are rounding noise from the eigensolver and are
// clamped to zero.  Terms with mu == 0 contribute nothing.
double spectral_entropy(const std::vector<double>& eigenvalues, std::int64_t trace);

// Full pipeline: Laplacian -> eigenvalues -> normalised spectrum -> entropy.
SpectralReport spectral_report(const Ubergraph& u);

} // namespace ubergraph
