#ifndef SEASHELL_RECONSTRUCTION_HPP
#define SEASHELL_RECONSTRUCTION_HPP

#include <cstddef>
#include <vector>

#include "seashell/spectral_data.hpp"

namespace seashell {

enum class DiffScheme { central2, central4 };
enum class ShiftMode { none, automatic };

struct ReconstructOptions {
    ShiftMode shift = ShiftMode::none;
    DiffScheme scheme = DiffScheme::central2;
    bool h_from_limit = false; // diagnostic H via the tail-limit identity
    int threads = 0;           // 0 = all available (capped by SEASHELL_THREADS)
};

struct Reconstruction {
    std::vector<double> grid;   // m+1 equispaced abscissae on [0,pi]
    std::vector<double> k_diag; // K_N(x_i, x_i)
    std::vector<double> q;      // 2 D[k_diag] + varpi
    double h = 0.0;             // K(0,0)
    double H = 0.0;             // -K(pi,pi), or the limit-formula diagnostic
    double varpi = 0.0;         // applied spectral shift
    std::size_t n_used = 0;     // number of data pairs consumed
};

Reconstruction reconstruct(const SpectralData& data, std::size_t m,
                           const ReconstructOptions& opts = {});

// d/dx on a uniform grid with spacing dx: 2nd-order central differences with
// one-sided 2nd-order closures, or the 4th-order variant.
std::vector<double> differentiate_diagonal(const std::vector<double>& f,
                                           double dx, DiffScheme scheme);

// 2 ||k1 - k2||_{L^p([0,pi])} by composite trapezoid quadrature (sup norm for
// p = inf): a certified upper bound for the W^{-1,p} distance of the
// corresponding potentials. Both grids must be equispaced on [0,pi].
double sobolev_diagnostic(const std::vector<double>& k1,
                          const std::vector<double>& k2, double p);

} // namespace seashell

#endif
