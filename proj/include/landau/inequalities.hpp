#pragma once

#include <complex>
#include <vector>

#include "landau/convolution.hpp"
#include "landau/grid.hpp"
#include "landau/kernel.hpp"

namespace landau {

/// Discrete approximation of the continuous Fourier transform,
///   ghat(xi_m) = dv^3 sum_k g(v_k) exp(-i xi_m . v_k),
/// on the frequency lattice xi = pi m / L per axis, m in [-n/2, n/2).
/// Stored in DFT index order; signed_mode/frequency map indices to modes.
struct FourierField {
    int n = 0;
    double half_width = 0.0;
    std::vector<std::complex<double>> values;

    int signed_mode(int m) const { return m < n / 2 ? m : m - n; }
    double frequency(int m) const;
    std::size_t index(int mi, int mj, int mk) const {
        return (static_cast<std::size_t>(mi) * n + mj) * n + mk;
    }
};

FourierField fourier_transform(const ScalarField& g);

/// Hardy-Littlewood-Sobolev ratio for gamma in (-2, 0):
///   [ int int |v-v*|^gamma f g ] / [ ||f||_q ||g||_q ],  q = 6/(6+gamma),
/// numerator via the cell-averaged |z|^gamma convolution. Exactly invariant
/// under positive scaling of f and g. Throws on a zero denominator.
double hls_ratio(const ScalarField& f, const ScalarField& g,
                 const KernelTables& tables, Convolver& conv);

/// Pitt ratio for gamma in [-2, 0):
///   [ int |v|^gamma g^2 dv ] / [ (2 pi)^-3 int |xi|^-gamma |ghat|^2 dxi ],
/// with the transform convention of fourier_transform (so the denominator
/// equals the unitary-transform weighted energy). Scale- and
/// dilation-invariant; bounded by the sharp Pitt constant.
double pitt_ratio(const ScalarField& g, double gamma);

}  // namespace landau
