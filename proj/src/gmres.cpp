#include "scatterlab/gmres.hpp"

#include <cmath>
#include <stdexcept>

namespace scatterlab {

namespace {

double nrm2(const Field& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

cdouble dotc(const Field& a, const Field& b) {
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace

GmresResult gmres_solve(const std::function<void(const Field&, Field&)>& apply_A, const Field& b,
                        const GmresOptions& opts) {
    const std::size_t n = b.size();
    GmresResult res;
    res.x.assign(n, cdouble(0.0));

    const double bnorm = nrm2(b);
    if (bnorm == 0.0) {
        res.converged = true;
        return res;
    }

    Field r = b;  // residual of (I - A)x = b at x = 0
    Field Ax(n), w(n);
    const int restart = std::max(1, opts.restart);

    std::vector<Field> V;
    std::vector<std::vector<cdouble>> H;  // H[j] holds column j, length j+2
    std::vector<cdouble> cs(restart), sn(restart), g(restart + 1);

    while (res.iterations < opts.max_iter) {
        double beta = nrm2(r);
        res.residual = beta / bnorm;
        res.history.push_back(res.residual);
        if (res.residual <= opts.tol) {
            res.converged = true;
            return res;
        }

        V.assign(1, r);
        for (auto& z : V[0]) z /= beta;
        H.clear();
        std::fill(g.begin(), g.end(), cdouble(0.0));
        g[0] = beta;

        int j = 0;
        for (; j < restart && res.iterations < opts.max_iter; ++j) {
            ++res.iterations;
            apply_A(V[j], Ax);
            for (std::size_t i = 0; i < n; ++i) w[i] = V[j][i] - Ax[i];  // (I - A) v_j

            H.emplace_back(j + 2, cdouble(0.0));
            for (int i = 0; i <= j; ++i) {
                const cdouble hij = dotc(V[i], w);
                H[j][i] = hij;
                for (std::size_t t = 0; t < n; ++t) w[t] -= hij * V[i][t];
            }
            const double hnext = nrm2(w);
            H[j][j + 1] = hnext;

            // Apply accumulated Givens rotations, then form the new one.
            for (int i = 0; i < j; ++i) {
                const cdouble t = cs[i] * H[j][i] + sn[i] * H[j][i + 1];
                H[j][i + 1] = -std::conj(sn[i]) * H[j][i] + std::conj(cs[i]) * H[j][i + 1];
                H[j][i] = t;
            }
            const double denom = std::hypot(std::abs(H[j][j]), hnext);
            if (denom == 0.0) {
                cs[j] = 1.0;
                sn[j] = 0.0;
            } else {
                cs[j] = std::abs(H[j][j]) / denom;
                sn[j] = (std::abs(H[j][j]) > 0.0)
                            ? (H[j][j] / std::abs(H[j][j])) * (hnext / denom)
                            : cdouble(hnext / denom);
            }
            const cdouble t = cs[j] * H[j][j] + sn[j] * H[j][j + 1];
            H[j][j] = t;
            H[j][j + 1] = 0.0;
            g[j + 1] = -std::conj(sn[j]) * g[j];
            g[j] = cs[j] * g[j];

            res.residual = std::abs(g[j + 1]) / bnorm;
            res.history.push_back(res.residual);

            if (hnext > 0.0 && res.residual > opts.tol && j + 1 < restart) {
                V.push_back(w);
                for (auto& z : V[j + 1]) z /= hnext;
            } else {
                ++j;
                break;
            }
        }

        // Back substitution for the current Krylov correction.
        std::vector<cdouble> y(j, cdouble(0.0));
        for (int i = j - 1; i >= 0; --i) {
            cdouble s = g[i];
            for (int t = i + 1; t < j; ++t) s -= H[t][i] * y[t];
            if (std::abs(H[i][i]) == 0.0) throw std::runtime_error("gmres: singular Hessenberg");
            y[i] = s / H[i][i];
        }
        for (int i = 0; i < j; ++i)
            for (std::size_t t = 0; t < n; ++t) res.x[t] += y[i] * V[i][t];

        if (res.residual <= opts.tol) {
            res.converged = true;
            return res;
        }

        // Recompute the true residual before restarting.
        apply_A(res.x, Ax);
        for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - (res.x[i] - Ax[i]);
    }

    res.converged = res.residual <= opts.tol;
    return res;
}

}  // namespace scatterlab
