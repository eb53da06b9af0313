// Small dense complex linear algebra for the 16-dim two-photon space and its
// 2- and 4-dim factors. Everything is fixed-size, row-major, exception-free.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace hbsa {

using cplx = std::complex<double>;

// default tolerance for algebraic identities (unitarity, orthonormality, ...)
inline constexpr double kAlgTol = 1e-12;

template <int N>
using Vec = std::array<cplx, static_cast<std::size_t>(N)>;
template <int N>
using Mat = std::array<cplx, static_cast<std::size_t>(N) * N>;

using Vec4 = Vec<4>;
using Vec16 = Vec<16>;
using Mat2 = Mat<2>;
using Mat4 = Mat<4>;
using Mat16 = Mat<16>;

template <int N>
constexpr Mat<N> identity() {
    Mat<N> m{};
    for (int i = 0; i < N; ++i) m[static_cast<std::size_t>(i) * N + i] = 1.0;
    return m;
}

template <int N>
Mat<N> matmul(const Mat<N>& lhs, const Mat<N>& rhs) {
    Mat<N> out{};
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            const cplx lik = lhs[static_cast<std::size_t>(i) * N + k];
            if (lik == cplx{}) continue;
            for (int j = 0; j < N; ++j) {
                out[static_cast<std::size_t>(i) * N + j] +=
                    lik * rhs[static_cast<std::size_t>(k) * N + j];
            }
        }
    }
    return out;
}

template <int N>
Vec<N> matvec(const Mat<N>& m, const Vec<N>& v) {
    Vec<N> out{};
    for (int i = 0; i < N; ++i) {
        cplx acc{};
        for (int j = 0; j < N; ++j) acc += m[static_cast<std::size_t>(i) * N + j] * v[j];
        out[i] = acc;
    }
    return out;
}

template <int N>
Mat<N> adjoint(const Mat<N>& m) {
    Mat<N> out{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out[static_cast<std::size_t>(i) * N + j] =
                std::conj(m[static_cast<std::size_t>(j) * N + i]);
    return out;
}

template <int N>
double max_abs_diff(const Mat<N>& lhs, const Mat<N>& rhs) {
    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    return worst;
}

template <int N>
double max_abs_diff(const Vec<N>& lhs, const Vec<N>& rhs) {
    double worst = 0.0;
    for (std::size_t k = 0; k < lhs.size(); ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    return worst;
}

template <int N>
bool is_unitary(const Mat<N>& m, double tol = kAlgTol) {
    return max_abs_diff<N>(matmul<N>(adjoint<N>(m), m), identity<N>()) <= tol;
}

// Eigenvalues (ascending) of an n-by-n complex Hermitian matrix, row-major.
// Cyclic Jacobi on the 2n-by-2n real symmetric embedding [[Re, -Im], [Im, Re]].
std::vector<double> hermitian_eigenvalues(const cplx* m, int n);

}  // namespace hbsa
