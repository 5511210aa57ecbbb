#ifndef SKETCHBAL_LINALG_HPP
#define SKETCHBAL_LINALG_HPP

#include <cstdint>
#include <vector>

#include "sketchbal/matrix.hpp"

namespace sketchbal {

/// Truncated singular value decomposition M ~ U diag(sigma) V^T with
/// orthonormal U (rows x k) and V (cols x k), sigma non-increasing.
struct ThinSVD {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;
};

struct SpectralSummary {
    double sigma_max = 0.0;
    double sigma_min = 0.0;
    double kappa = 1.0;
    /// Set when sigma_min fell below the numerical-rank floor; kappa is then
    /// the +infinity sentinel.
    bool degenerate = false;
};

/// Singular values below this multiple of sigma_1 are treated as zero in all
/// spectral comparisons.
inline constexpr double kSpectralRankFloor = 1e-15;

/// Top-k singular triplets of m, computed by Householder QR preconditioning
/// followed by a one-sided Jacobi sweep loop. Deterministic for fixed input.
ThinSVD thin_svd(const DenseMatrix& m, std::size_t k);

/// Thin orthonormal factor of a full-column-rank matrix (Householder QR).
/// Throws when a pivot falls below 1e-12 * ||G||_F.
DenseMatrix qr_orthonormalize(const DenseMatrix& g);

/// Rayleigh-quotient power iteration estimate of the largest eigenvalue of
/// M^T M, run for `iters` steps from a seeded random start vector. The
/// estimate never exceeds the true value and is non-decreasing in `iters`.
double power_iteration_lambda_max(const DenseMatrix& m, std::size_t iters, std::uint64_t seed);

/// Extreme retained singular values sigma_1, sigma_r and their ratio.
SpectralSummary spectral_summary(const DenseMatrix& m, std::size_t r);

/// Summary assembled from an already-known singular spectrum (descending).
SpectralSummary summary_from_sigma(const std::vector<double>& sigma);

}  // namespace sketchbal

#endif
