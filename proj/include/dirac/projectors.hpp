#pragma once

// Spin and energy projectors, diads, pi-projectors and polarization sums.
//
// Each polarization sum is returned as an explicit outer-product sum built
// from the spinor constructors (lhs) next to its closed form (rhs); callers
// decide what residual is acceptable.

#include <cmath>
#include <string>

#include "dirac/clifford.hpp"
#include "dirac/kinematics.hpp"
#include "dirac/spinors.hpp"

namespace dirac {

inline constexpr double kSpinVectorTolerance = 1e-12;
inline constexpr double kMassShellTolerance = 1e-10;

/// Purely spatial unit four-vector s = (0, n), so s.s = -1.
class SpinVector {
public:
    explicit SpinVector(const FourVector& s) : s_(s)
    {
        if (s.time() != 0.0)
            throw InvalidArgument("spin vector must have s0 = 0");
        if (!is_unit(s.space(), kSpinVectorTolerance))
            throw InvalidArgument("spin vector must have |s| = 1");
    }
    explicit SpinVector(const Vector3& n) : SpinVector(FourVector::spatial(n)) {}

    const FourVector& four() const noexcept { return s_; }
    Vector3 direction() const { return s_.space(); }
    SpinVector operator-() const { return SpinVector(-s_); }

private:
    FourVector s_;
};

enum class ProjectorKind { spin, energy_plus, energy_minus, pi, pi_neg, diad };

struct Projector {
    MatrixC4 matrix;
    ProjectorKind kind;
};

/// (1 + sigma.n)/2 on two-spinors.
inline MatrixC2 spin_projector_rest(const Vector3& nhat)
{
    if (!is_unit(nhat, kSpinVectorTolerance))
        throw InvalidArgument("spin_projector_rest: axis is not a unit vector");
    return 0.5 * (MatrixC2::Identity() + sigma_dot(nhat));
}

/// (1 + gamma5 s-slash)/2 = diag((1 + sigma.s)/2, (1 - sigma.s)/2).
inline Projector spin_projector(const SpinVector& s)
{
    return {0.5 * (MatrixC4::Identity() + gamma5() * slash(s.four())), ProjectorKind::spin};
}

/// Spin vector of tetrad member tau about the axis n: +n for tau = 1, 3 and
/// -n for tau = 2, 4, so each sign serves one upper and one lower pairing.
inline SpinVector tetrad_spin_vector(TetradIndex tau, const Vector3& nhat)
{
    return SpinVector(tau.helicity() == Helicity::up ? Vector3(nhat) : Vector3(-nhat));
}

namespace detail {

inline MatrixC4 checked_slash(const FourVector& p, double m)
{
    if (!(m > 0.0))
        throw InvalidArgument("mass must be positive");
    const double residual = std::abs(p.square() - m * m);
    if (residual > kMassShellTolerance * std::max(1.0, m * m))
        throw InvalidArgument("momentum is off the mass shell: |p.p - m^2| = " +
                              std::to_string(residual));
    return slash(p);
}

inline MatrixC4 energy_matrix(const MatrixC4& pslash, double m, Sign sign)
{
    const MatrixC4 one = MatrixC4::Identity();
    if (sign == Sign::plus)
        return (pslash + m * one) / (2.0 * m);
    return (m * one - pslash) / (2.0 * m);
}

inline MatrixC4 pi_matrix(const MatrixC4& pslash, double m, const Vector3& s, bool negative_lambda,
                          SpatialGammaIndex index)
{
    const MatrixC4 one = MatrixC4::Identity();
    const MatrixC4 gs = spatial_gamma_dot(s, index);
    if (!negative_lambda)
        return (-1.0 / (4.0 * m)) * ((pslash - m * one) * (one - gamma5() * gs));
    return (1.0 / (4.0 * m)) * ((pslash + m * one) * (one - gs * gamma5()));
}

inline ProjectorKind energy_kind(Sign sign)
{
    return sign == Sign::plus ? ProjectorKind::energy_plus : ProjectorKind::energy_minus;
}

}  // namespace detail

/// (p-slash + m)/2m for +, (m - p-slash)/2m for -. Inside |p0| < m the
/// continued p-slash of the kinematic point is used.
inline Projector energy_projector(const KinematicPoint& k, Sign sign)
{
    return {detail::energy_matrix(k.momentum_slash(), k.m(), sign), detail::energy_kind(sign)};
}

/// Same, for an explicit four-momentum; rejects off-shell input.
inline Projector energy_projector(const FourVector& p, double m, Sign sign)
{
    return {detail::energy_matrix(detail::checked_slash(p, m), m, sign), detail::energy_kind(sign)};
}

/// |Phi><Phi| Gamma: the outer product with the bra multiplied by the inserted
/// matrix, so diad(u, gamma0) = u u-bar.
enum class DiadInsert { gamma0, gamma5 };

inline MatrixC4 diad(const Bispinor& column, DiadInsert insert)
{
    const MatrixC4& g = insert == DiadInsert::gamma0 ? gamma(0) : gamma5();
    return column * (column.adjoint() * g);
}

enum class PiVariant { lambda, neg_lambda };

/// lambda:     -(1/4m)(p-slash - m)(1 - gamma5 (gamma.s))
/// neg_lambda: +(1/4m)(p-slash + m)(1 - (gamma.s) gamma5)
inline Projector pi_projector(const KinematicPoint& k, const SpinVector& s, PiVariant variant,
                              SpatialGammaIndex index = SpatialGammaIndex::upper)
{
    const bool neg = variant == PiVariant::neg_lambda;
    return {detail::pi_matrix(k.momentum_slash(), k.m(), s.direction(), neg, index),
            neg ? ProjectorKind::pi_neg : ProjectorKind::pi};
}

inline Projector pi_projector(const FourVector& p, double m, const SpinVector& s, PiVariant variant,
                              SpatialGammaIndex index = SpatialGammaIndex::upper)
{
    const bool neg = variant == PiVariant::neg_lambda;
    return {detail::pi_matrix(detail::checked_slash(p, m), m, s.direction(), neg, index),
            neg ? ProjectorKind::pi_neg : ProjectorKind::pi};
}

enum class PolsumKind { spinor, antispinor, breve_plus, breve_minus, completeness };

struct PolarizationSum {
    MatrixC4 lhs;  ///< explicit sum over the polarization set
    MatrixC4 rhs;  ///< closed form
};

/// Sum over lambda of u ū for the upper-block (lambda+) or lower-block
/// (lambda-) parts of the breve bispinor, each diad built from the column
/// and the matching slot of breve_u_bar.
inline MatrixC4 breve_block_sum(const KinematicPoint& k, bool upper)
{
    MatrixC4 sum = MatrixC4::Zero();
    for (Helicity h : kHelicities) {
        Bispinor col = breve_u(k, h, h);
        RowBispinor row = breve_u_bar(k, h, h);
        if (upper) {
            col.tail<2>().setZero();
            row.tail<2>().setZero();
        } else {
            col.head<2>().setZero();
            row.head<2>().setZero();
        }
        sum += col * row;
    }
    return sum;
}

/// Explicit polarization sum and its closed form.
///
///  spinor       sum_l u(p) ū(p)           vs (p-slash + m)/2m    |p0| >= m
///  antispinor   sum_l u(-p) ū(-p)         vs (m - p-slash)/2m    |p0| >= m
///  breve_plus   sum over lambda+ blocks   vs (p-slash + m)/2m    |p0| <= m
///  breve_minus  sum over lambda- blocks   vs (m - p-slash)/2m    |p0| <= m
///  completeness L+ + L-                   vs 1                   any p0
///
/// u(-p) is psi_minus at the negated-energy point with its analytic conjugate
/// row; the breve blocks use the lambda+ = lambda- bispinor.
inline PolarizationSum polsum(PolsumKind kind, const KinematicPoint& k)
{
    const MatrixC4 plus = energy_projector(k, Sign::plus).matrix;
    const MatrixC4 minus = energy_projector(k, Sign::minus).matrix;
    switch (kind) {
    case PolsumKind::spinor: {
        k.require(Region::real, "polsum(spinor)");
        MatrixC4 lhs = MatrixC4::Zero();
        for (Helicity h : kHelicities)
            lhs += psi_minus(k, h, h) * psi_minus_bar(k, h, h);
        return {lhs, plus};
    }
    case PolsumKind::antispinor: {
        k.require(Region::real, "polsum(antispinor)");
        const KinematicPoint neg = k.negated_energy();
        MatrixC4 lhs = MatrixC4::Zero();
        for (Helicity h : kHelicities)
            lhs += psi_minus(neg, h, h) * psi_minus_bar(neg, h, h);
        return {lhs, minus};
    }
    case PolsumKind::breve_plus:
        k.require(Region::breve, "polsum(breve-plus)");
        return {breve_block_sum(k, true), plus};
    case PolsumKind::breve_minus:
        k.require(Region::breve, "polsum(breve-minus)");
        return {breve_block_sum(k, false), minus};
    case PolsumKind::completeness:
        return {plus + minus, MatrixC4::Identity()};
    }
    throw InvalidArgument("polsum: unknown kind");
}

}  // namespace dirac
