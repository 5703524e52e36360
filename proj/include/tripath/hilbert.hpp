// Copyright 2026 The tripath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exact-dimension complex linear algebra for the two-qubit product space:
 * pure states, operators, density operators, Born probabilities and a
 * deterministic Hermitian eigensolver.
 *
 * The basis order is fixed once and for all as
 * (|0,0>, |0,1>, |1,0>, |1,1>); every array in the library uses it.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>

#include "tripath/errors.hpp"

namespace tripath {

using Complex = std::complex<double>;

/// Hilbert-space dimension of the two-qubit product space.
inline constexpr std::size_t kDim = 4;

/// Tolerance for structural invariants (normalization, Hermiticity,
/// unitarity, orthonormality).
inline constexpr double kTol = 1e-10;

/// Postselection probabilities at or below this threshold make
/// conditional values undefined.
inline constexpr double kPostselectionTol = 1e-12;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

inline std::string format_real(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

} // namespace detail

/**
 * A normalized state vector over the fixed two-qubit basis.
 *
 * Immutable after construction; the constructor rejects non-finite
 * amplitudes and vectors whose squared norm deviates from 1 by more
 * than kTol.
 */
class PureState {
  public:
    using Amplitudes = std::array<Complex, kDim>;

    explicit PureState(const Amplitudes &amplitudes) : amp_(amplitudes) {
        for (const auto &a : amp_) {
            if (!is_finite(a)) {
                throw InvalidStateError("state amplitude is not finite");
            }
        }
        const double n2 = squared_norm();
        if (std::abs(n2 - 1.0) > kTol) {
            throw InvalidStateError("state is not normalized: |psi|^2 = " +
                                    detail::format_real(n2));
        }
    }

    /// The k-th computational basis vector.
    static PureState basis_state(std::size_t k) {
        if (k >= kDim) {
            throw DomainError("basis index out of range");
        }
        Amplitudes a{};
        a[k] = Complex{1.0, 0.0};
        return PureState(a);
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    static PureState normalized(const Amplitudes &amplitudes) {
        double n2 = 0.0;
        for (const auto &a : amplitudes) {
            if (!is_finite(a)) {
                throw InvalidStateError("state amplitude is not finite");
            }
            n2 += std::norm(a);
        }
        if (n2 < 1e-24) {
            throw InvalidStateError("cannot normalize a (near-)zero vector");
        }
        const double inv = 1.0 / std::sqrt(n2);
        Amplitudes a = amplitudes;
        for (auto &x : a) {
            x *= inv;
        }
        return PureState(a);
    }

    const Amplitudes &amplitudes() const { return amp_; }
    Complex amplitude(std::size_t k) const { return amp_[k]; }

    double squared_norm() const {
        double n2 = 0.0;
        for (const auto &a : amp_) {
            n2 += std::norm(a);
        }
        return n2;
    }

    friend bool operator==(const PureState &, const PureState &) = default;

  private:
    Amplitudes amp_;
};

/// <u|v>, conjugate-linear in the first argument.
inline Complex inner_product(const PureState &u, const PureState &v) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < kDim; ++k) {
        acc += std::conj(u.amplitude(k)) * v.amplitude(k);
    }
    return acc;
}

/**
 * A 4x4 complex matrix in row-major order.
 *
 * No structural invariant beyond finiteness; unitarity or Hermiticity
 * are asserted by the operations that need them.
 */
class Operator {
  public:
    using Matrix = std::array<Complex, kDim * kDim>;

    explicit Operator(const Matrix &m) : m_(m) {
        for (const auto &x : m_) {
            if (!is_finite(x)) {
                throw InvalidStateError("operator entry is not finite");
            }
        }
    }

    static Operator identity() {
        Matrix m{};
        for (std::size_t k = 0; k < kDim; ++k) {
            m[k * kDim + k] = Complex{1.0, 0.0};
        }
        return Operator(m);
    }

    /// |u><v| as a matrix.
    static Operator outer(const PureState &u, const PureState &v) {
        Matrix m{};
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                m[r * kDim + c] = u.amplitude(r) * std::conj(v.amplitude(c));
            }
        }
        return Operator(m);
    }

    Complex at(std::size_t row, std::size_t col) const {
        return m_[row * kDim + col];
    }

    const Matrix &entries() const { return m_; }

    Operator dagger() const {
        Matrix m{};
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                m[r * kDim + c] = std::conj(m_[c * kDim + r]);
            }
        }
        return Operator(m);
    }

    Complex trace() const {
        Complex t{0.0, 0.0};
        for (std::size_t k = 0; k < kDim; ++k) {
            t += m_[k * kDim + k];
        }
        return t;
    }

    /// Matrix-vector product, without renormalization.
    PureState::Amplitudes apply(const PureState::Amplitudes &v) const {
        PureState::Amplitudes out{};
        for (std::size_t r = 0; r < kDim; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < kDim; ++c) {
                acc += m_[r * kDim + c] * v[c];
            }
            out[r] = acc;
        }
        return out;
    }

    friend Operator operator*(const Operator &a, const Operator &b) {
        Matrix m{};
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < kDim; ++k) {
                    acc += a.m_[r * kDim + k] * b.m_[k * kDim + c];
                }
                m[r * kDim + c] = acc;
            }
        }
        return Operator(m);
    }

    friend Operator operator+(const Operator &a, const Operator &b) {
        Matrix m{};
        for (std::size_t k = 0; k < kDim * kDim; ++k) {
            m[k] = a.m_[k] + b.m_[k];
        }
        return Operator(m);
    }

    friend Operator operator-(const Operator &a, const Operator &b) {
        Matrix m{};
        for (std::size_t k = 0; k < kDim * kDim; ++k) {
            m[k] = a.m_[k] - b.m_[k];
        }
        return Operator(m);
    }

    friend Operator operator*(double s, const Operator &a) {
        Matrix m = a.m_;
        for (auto &x : m) {
            x *= s;
        }
        return Operator(m);
    }

    /// max_ij |(U^dag U - I)_ij|
    double unitarity_residual() const {
        const Operator g = dagger() * (*this);
        double res = 0.0;
        for (std::size_t r = 0; r < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) {
                const Complex expect = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                res = std::max(res, std::abs(g.at(r, c) - expect));
            }
        }
        return res;
    }

    bool is_unitary(double tol = kTol) const { return unitarity_residual() <= tol; }

    double max_abs_entry() const {
        double m = 0.0;
        for (const auto &x : m_) {
            m = std::max(m, std::abs(x));
        }
        return m;
    }

    friend bool operator==(const Operator &, const Operator &) = default;

  private:
    Matrix m_;
};

/// <u| M |v>
inline Complex matrix_element(const PureState &u, const Operator &m, const PureState &v) {
    const auto mv = m.apply(v.amplitudes());
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < kDim; ++k) {
        acc += std::conj(u.amplitude(k)) * mv[k];
    }
    return acc;
}

/**
 * Eigenvalues of the Hermitian part (M + M^dag)/2, ascending.
 *
 * Cyclic complex Jacobi rotations with a fixed pivot order; fully
 * deterministic. Plenty of accuracy for 4x4 inputs of O(1) scale.
 */
inline std::array<double, kDim> hermitian_eigenvalues(const Operator &m) {
    std::array<std::array<Complex, kDim>, kDim> a{};
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            a[r][c] = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
        }
    }

    double scale = 1.0;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            scale = std::max(scale, std::abs(a[r][c]));
        }
    }
    const double stop = 1e-16 * scale;

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < kDim; ++p) {
            for (std::size_t q = p + 1; q < kDim; ++q) {
                off = std::max(off, std::abs(a[p][q]));
            }
        }
        if (off <= stop) {
            break;
        }
        for (std::size_t p = 0; p < kDim; ++p) {
            for (std::size_t q = p + 1; q < kDim; ++q) {
                const Complex beta = a[p][q];
                const double b = std::abs(beta);
                if (b <= stop) {
                    continue;
                }
                const Complex phase = beta / b; // e^{i phi}
                const double tau = (a[q][q].real() - a[p][p].real()) / (2.0 * b);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G restricted to rows/cols (p,q):
                //   [ c            s          ]
                //   [ -s conj(ph)  c conj(ph) ]
                const Complex gqp = -s * std::conj(phase);
                const Complex gqq = c * std::conj(phase);
                // A <- A G
                for (std::size_t r = 0; r < kDim; ++r) {
                    const Complex arp = a[r][p];
                    const Complex arq = a[r][q];
                    a[r][p] = c * arp + gqp * arq;
                    a[r][q] = s * arp + gqq * arq;
                }
                // A <- G^dag A
                for (std::size_t col = 0; col < kDim; ++col) {
                    const Complex apc = a[p][col];
                    const Complex aqc = a[q][col];
                    a[p][col] = c * apc + std::conj(gqp) * aqc;
                    a[q][col] = s * apc + std::conj(gqq) * aqc;
                }
            }
        }
    }

    std::array<double, kDim> eig{};
    for (std::size_t k = 0; k < kDim; ++k) {
        eig[k] = a[k][k].real();
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Residuals of the density-operator invariants for an arbitrary matrix.
struct DensityDiagnostics {
    double hermiticity_residual; ///< max_ij |(M - M^dag)_ij|
    double trace_residual;       ///< |tr M - 1|
    double min_eigenvalue;       ///< smallest eigenvalue of the Hermitian part

    bool valid(double tol = kTol) const {
        return hermiticity_residual <= tol && trace_residual <= tol &&
               min_eigenvalue >= -tol;
    }
};

inline DensityDiagnostics validate_density(const Operator &m) {
    double herm = 0.0;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            herm = std::max(herm, std::abs(m.at(r, c) - std::conj(m.at(c, r))));
        }
    }
    const double tr = std::abs(m.trace() - Complex{1.0, 0.0});
    const auto eig = hermitian_eigenvalues(m);
    return DensityDiagnostics{herm, tr, eig.front()};
}

/**
 * A validated 4x4 density operator (Hermitian, unit trace, positive
 * semidefinite within kTol). Immutable after construction.
 */
class DensityOperator {
  public:
    explicit DensityOperator(const Operator &m) : m_(m) {
        const DensityDiagnostics d = validate_density(m);
        if (!d.valid()) {
            throw InvalidDensityError(
                "matrix is not a density operator: hermiticity residual " +
                detail::format_real(d.hermiticity_residual) + ", trace residual " +
                detail::format_real(d.trace_residual) + ", min eigenvalue " +
                detail::format_real(d.min_eigenvalue));
        }
    }

    /// |s><s|
    static DensityOperator pure(const PureState &s) {
        return DensityOperator(Operator::outer(s, s));
    }

    const Operator &matrix() const { return m_; }

    friend bool operator==(const DensityOperator &, const DensityOperator &) = default;

  private:
    Operator m_;
};

/// Tr[rho |s><s|], clamped to [0, 1].
inline double born_probability(const DensityOperator &rho, const PureState &s) {
    const double p = matrix_element(s, rho.matrix(), s).real();
    return std::clamp(p, 0.0, 1.0);
}

/// U |psi>; rejects non-unitary U.
inline PureState apply_unitary(const Operator &u, const PureState &psi) {
    const double res = u.unitarity_residual();
    if (res > kTol) {
        throw NonUnitaryError("operator is not unitary: residual " +
                              detail::format_real(res));
    }
    return PureState(u.apply(psi.amplitudes()));
}

/// U rho U^dag; rejects non-unitary U.
inline DensityOperator apply_unitary(const Operator &u, const DensityOperator &rho) {
    const double res = u.unitarity_residual();
    if (res > kTol) {
        throw NonUnitaryError("operator is not unitary: residual " +
                              detail::format_real(res));
    }
    return DensityOperator(u * rho.matrix() * u.dagger());
}

} // namespace tripath
