#include "hbsa/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hbsa {

namespace {

// cyclic Jacobi for a dense real symmetric matrix, in place
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double>& m, int n) {
    auto at = [&](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };

    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(at(i, i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) scale = std::max(scale, std::abs(at(i, j)));
    if (scale == 0.0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);

    const double stop = 1e-15 * scale;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(at(i, j)));
        if (off <= stop) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double mkp = at(k, p);
                    const double mkq = at(k, q);
                    at(k, p) = c * mkp - s * mkq;
                    at(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = at(p, k);
                    const double mqk = at(q, k);
                    at(p, k) = c * mpk - s * mqk;
                    at(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const cplx* m, int n) {
    if (n <= 0) throw std::invalid_argument("hermitian_eigenvalues: empty matrix");

    // real symmetric embedding: each eigenvalue of the Hermitian matrix
    // appears exactly twice in [[Re, -Im], [Im, Re]]
    const int nn = 2 * n;
    std::vector<double> embed(static_cast<std::size_t>(nn) * nn, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const cplx z = m[static_cast<std::size_t>(i) * n + j];
            embed[static_cast<std::size_t>(i) * nn + j] = z.real();
            embed[static_cast<std::size_t>(i) * nn + (j + n)] = -z.imag();
            embed[static_cast<std::size_t>(i + n) * nn + j] = z.imag();
            embed[static_cast<std::size_t>(i + n) * nn + (j + n)] = z.real();
        }
    }

    const std::vector<double> doubled = jacobi_symmetric_eigenvalues(embed, nn);
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = doubled[static_cast<std::size_t>(2 * i)];
    return eig;
}

}  // namespace hbsa
