#pragma once

// Two-spinors, bispinor bases and their adjoints.
//
// Plane-wave phases are omitted throughout (objects are evaluated at x = 0).
// Every square root of a boost factor goes through branch_sqrt, so calling a
// constructor at p0 -> -p0, or inside |p0| < m, yields the continued objects
// without separate code paths.

#include <utility>

#include "dirac/clifford.hpp"
#include "dirac/kinematics.hpp"

namespace dirac {

inline Bispinor stack(const TwoSpinor& upper, const TwoSpinor& lower)
{
    Bispinor b;
    b << upper, lower;
    return b;
}

inline TwoSpinor upper_block(const Bispinor& b) { return b.head<2>(); }
inline TwoSpinor lower_block(const Bispinor& b) { return b.tail<2>(); }

/// phi_{+1/2} = (1, 0), phi_{-1/2} = (0, 1).
inline TwoSpinor basis_two_spinor(Helicity h)
{
    return h == Helicity::up ? TwoSpinor(1.0, 0.0) : TwoSpinor(0.0, 1.0);
}

/// Boosted two-spinor [sqrt((p0+m)/2m) +- (sigma.n) sqrt((p0-m)/2m)] phi_lambda;
/// + for the undotted spinor xi, - for the dotted one.
inline TwoSpinor xi(const KinematicPoint& k, Helicity h, bool dotted)
{
    k.require(Region::real, "xi");
    const double s = dotted ? -1.0 : 1.0;
    const MatrixC2 op = k.upper_factor() * MatrixC2::Identity() +
                        (s * k.lower_factor()) * sigma_dot(k.nhat());
    return op * basis_two_spinor(h);
}

/// exp(+-(chi/2) sigma.n) phi, + undotted, - dotted.
inline TwoSpinor boost_two_spinor(const TwoSpinor& phi, const BoostParams& b, bool dotted)
{
    const double s = dotted ? -1.0 : 1.0;
    const MatrixC2 op = std::cosh(0.5 * b.chi) * MatrixC2::Identity() +
                        (s * std::sinh(0.5 * b.chi)) * sigma_dot(b.nhat);
    return op * phi;
}

struct ParitySpinors {
    TwoSpinor positive;  ///< (xi + xi_dot)/2
    TwoSpinor negative;  ///< (xi - xi_dot)/2
};

inline ParitySpinors parity_spinors(const TwoSpinor& xi_undotted, const TwoSpinor& xi_dotted)
{
    return {0.5 * (xi_undotted + xi_dotted), 0.5 * (xi_undotted - xi_dotted)};
}

/// Tetrad basis bispinor u(p, s^tau).
///
/// tau = 1, 2: upper = sqrt((p0+m)/2m) phi_{+-1/2}, lower = 0.
/// tau = 3, 4: upper = 0, lower = (sigma.n) sqrt((p0-m)/2m) phi_{+-1/2}.
inline Bispinor bispinor_u(const KinematicPoint& k, TetradIndex tau)
{
    k.require(Region::real, "bispinor_u");
    const TwoSpinor phi = basis_two_spinor(tau.helicity());
    if (tau.upper())
        return stack(k.upper_factor() * phi, TwoSpinor::Zero());
    return stack(TwoSpinor::Zero(), k.lower_factor() * (sigma_dot(k.nhat()) * phi));
}

/// Positive-parity bispinor with independently chosen upper (lambda_s) and
/// lower (lambda_a) helicities; with lambda_s = lambda_a it is the usual
/// Dirac spinor normalized to u-bar u = 1.
inline Bispinor psi_minus(const KinematicPoint& k, Helicity lambda_s, Helicity lambda_a)
{
    return bispinor_u(k, TetradIndex::upper_for(lambda_s)) +
           bispinor_u(k, TetradIndex::lower_for(lambda_a));
}

/// Conjugate row of psi_minus in which only the basis spinors are
/// conjugated: (sqrt((p0+m)/2m) phi_s^+, -sqrt((p0-m)/2m) phi_a^+ sigma.n).
///
/// For p0 >= m this coincides with dirac_adjoint. For p0 <= -m it stays
/// analytic in the boost factors instead of conjugating them, which is the
/// form the antispinor polarization sum (m - p-slash)/2m is written in.
inline RowBispinor psi_minus_bar(const KinematicPoint& k, Helicity lambda_s, Helicity lambda_a)
{
    k.require(Region::real, "psi_minus_bar");
    const TwoSpinor phi_s = basis_two_spinor(lambda_s);
    const TwoSpinor phi_a = basis_two_spinor(lambda_a);
    RowBispinor row;
    row << k.upper_factor() * phi_s.adjoint(),
        -k.lower_factor() * (phi_a.adjoint() * sigma_dot(k.nhat()));
    return row;
}

/// Antisymmetric basis u+(p, s^tau) with overall factor +-i.
///
/// tau = 1, 2: upper = +-i sqrt((p0-m)/2m) phi, lower = 0.
/// tau = 3, 4: upper = 0, lower = +-i (sigma.n) sqrt((p0+m)/2m) phi.
inline Bispinor bispinor_u_plus(const KinematicPoint& k, TetradIndex tau, Sign sign)
{
    k.require(Region::real, "bispinor_u_plus");
    const Complex c = sign_value(sign) * kI;
    const TwoSpinor phi = basis_two_spinor(tau.helicity());
    if (tau.upper())
        return stack(c * k.lower_factor() * phi, TwoSpinor::Zero());
    return stack(TwoSpinor::Zero(), c * k.upper_factor() * (sigma_dot(k.nhat()) * phi));
}

namespace detail {

// sqrt((p0+m)/2m) + sign * i (sigma.n) sqrt((p0-m)/2m)
inline MatrixC2 breve_factor(const KinematicPoint& k, double sign)
{
    return k.upper_factor() * MatrixC2::Identity() +
           (sign * kI * k.lower_factor()) * sigma_dot(k.nhat());
}

}  // namespace detail

/// Complex bispinor on |p0| <= m:
/// upper = [A + i(sigma.n)B] phi_{lambda+}, lower = [A - i(sigma.n)B] phi_{lambda-},
/// A = sqrt((p0+m)/2m), B = sqrt((p0-m)/2m) = i sqrt((m-p0)/2m).
inline Bispinor breve_u(const KinematicPoint& k, Helicity lambda_plus, Helicity lambda_minus)
{
    k.require(Region::breve, "breve_u");
    return stack(detail::breve_factor(k, +1.0) * basis_two_spinor(lambda_plus),
                 detail::breve_factor(k, -1.0) * basis_two_spinor(lambda_minus));
}

/// Conjugate row of breve_u, built through gamma5 from the column
/// (phi^+[A - i(sigma.n)B], phi^+[A + i(sigma.n)B]) and transposed. After the
/// block swap the row reads (phi_{lambda+}^+[A + i(sigma.n)B],
/// phi_{lambda-}^+[A - i(sigma.n)B]); A and B are not conjugated.
inline RowBispinor breve_u_bar(const KinematicPoint& k, Helicity lambda_plus,
                               Helicity lambda_minus)
{
    k.require(Region::breve, "breve_u_bar");
    // Column before the gamma5 swap: the lambda- slot sits on top.
    Bispinor col;
    col << (basis_two_spinor(lambda_minus).adjoint() * detail::breve_factor(k, -1.0)).transpose(),
        (basis_two_spinor(lambda_plus).adjoint() * detail::breve_factor(k, +1.0)).transpose();
    return (gamma5() * col).transpose();
}

/// e_tau / sqrt(2), the p0 = 0 basis.
inline Bispinor rest_basis(TetradIndex tau)
{
    Bispinor b = Bispinor::Zero();
    b(tau.value() - 1) = 1.0 / std::sqrt(2.0);
    return b;
}

/// u^+ gamma^0.
inline RowBispinor dirac_adjoint(const Bispinor& u) { return u.adjoint() * gamma(0); }

enum class SpinorVariant { u, v };

/// u-variant: gamma5 (gamma.s) breve; v-variant: (gamma.s) gamma5 breve.
/// s must be purely spatial.
inline Bispinor spinor_from_breve(const Bispinor& breve, const FourVector& s, SpinorVariant variant,
                                  SpatialGammaIndex index = SpatialGammaIndex::upper)
{
    if (s.time() != 0.0)
        throw InvalidArgument("spinor_from_breve: spin tetrad must be spatial (s0 = 0)");
    const MatrixC4 gs = spatial_gamma_dot(s.space(), index);
    if (variant == SpinorVariant::u)
        return gamma5() * (gs * breve);
    return gs * (gamma5() * breve);
}

/// kappa = sqrt((p0-m)/(p0+m)), the rest-frame spin eigenvalue factor.
inline double kappa(double p0, double m)
{
    if (!(m > 0.0))
        throw InvalidArgument("kappa: mass must be positive");
    if (p0 < m)
        throw RegionError("kappa: p0 < m gives an imaginary kappa; use the breve region");
    return std::sqrt((p0 - m) / (p0 + m));
}

}  // namespace dirac
