#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "scatterlab/grid.hpp"

namespace scatterlab {

struct GmresOptions {
    double tol = 1e-8;   // relative residual target
    int max_iter = 500;  // total iterations across restarts
    int restart = 50;
};

struct GmresResult {
    Field x;
    int iterations = 0;
    double residual = 0.0;  // relative
    bool converged = false;
    std::vector<double> history;
};

/// Restarted GMRES for x = b + A x posed as (I - A) x = b, with A applied
/// matrix-free.  Arnoldi with modified Gram-Schmidt and Givens rotations.
GmresResult gmres_solve(const std::function<void(const Field&, Field&)>& apply_A, const Field& b,
                        const GmresOptions& opts = {});

}  // namespace scatterlab
