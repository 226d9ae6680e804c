#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "dirac/clifford.hpp"

namespace dirac {

/// Square root of a real number on the principal branch: sqrt(x) for x >= 0,
/// i*sqrt(-x) for x < 0. Never returns the -i branch, whatever the sign of
/// zero the argument carries.
inline Complex branch_sqrt(double x)
{
    if (x >= 0.0)
        return {std::sqrt(x), 0.0};
    return {0.0, std::sqrt(-x)};
}

enum class Helicity { up, down };  // lambda = +1/2, -1/2

constexpr double helicity_value(Helicity h) noexcept { return h == Helicity::up ? 0.5 : -0.5; }
constexpr Helicity opposite(Helicity h) noexcept
{
    return h == Helicity::up ? Helicity::down : Helicity::up;
}

inline constexpr Helicity kHelicities[] = {Helicity::up, Helicity::down};

/// Tetrad label tau in 1..4. 1 and 2 are upper-block states with
/// lambda = +1/2 and -1/2; 3 and 4 the lower-block counterparts.
class TetradIndex {
public:
    explicit TetradIndex(int tau) : tau_(tau)
    {
        if (tau < 1 || tau > 4)
            throw InvalidArgument("tetrad index " + std::to_string(tau) + " outside 1..4");
    }

    int value() const noexcept { return tau_; }
    bool upper() const noexcept { return tau_ <= 2; }
    Helicity helicity() const noexcept { return (tau_ % 2 == 1) ? Helicity::up : Helicity::down; }

    static TetradIndex upper_for(Helicity h) { return TetradIndex(h == Helicity::up ? 1 : 2); }
    static TetradIndex lower_for(Helicity h) { return TetradIndex(h == Helicity::up ? 3 : 4); }

    friend bool operator==(TetradIndex, TetradIndex) = default;

private:
    int tau_;
};

inline constexpr double kUnitTolerance = 1e-14;

inline bool is_unit(const Vector3& n, double tol = kUnitTolerance)
{
    return std::abs(n.norm() - 1.0) <= tol;
}

enum class Region {
    real,   ///< |p0| >= m: real boost factors, on-shell spinor bases
    breve,  ///< |p0| <= m: complex continuation used by the breve bispinor
};

/// Mass, energy parameter and helicity axis.
///
/// The three-momentum is derived, not stored: |p| is the product of the two
/// principal-branch boost factors, 2m sqrt((p0+m)/2m) sqrt((p0-m)/2m). That is
/// sqrt(p0^2 - m^2) for p0 >= m, -sqrt(p0^2 - m^2) for p0 <= -m (negating the
/// energy also reverses p) and i sqrt(m^2 - p0^2) inside |p0| < m, where the
/// continuation amounts to n -> i n.
class KinematicPoint {
public:
    KinematicPoint(double m, double p0, const Vector3& nhat = Vector3::UnitZ())
        : m_(m), p0_(p0), nhat_(nhat)
    {
        if (!(m > 0.0) || !std::isfinite(m))
            throw InvalidArgument("kinematic point: mass must be positive and finite");
        if (!std::isfinite(p0))
            throw InvalidArgument("kinematic point: p0 must be finite");
        if (!nhat.allFinite() || !is_unit(nhat))
            throw InvalidArgument("kinematic point: helicity axis is not a unit vector");
    }

    static KinematicPoint at_rest(double m, const Vector3& nhat = Vector3::UnitZ())
    {
        return {m, m, nhat};
    }

    double m() const noexcept { return m_; }
    double p0() const noexcept { return p0_; }
    const Vector3& nhat() const noexcept { return nhat_; }

    bool in_region(Region r) const noexcept
    {
        return r == Region::real ? std::abs(p0_) >= m_ : std::abs(p0_) <= m_;
    }

    /// sqrt((p0+m)/2m) on the principal branch.
    Complex upper_factor() const { return branch_sqrt((p0_ + m_) / (2.0 * m_)); }
    /// sqrt((p0-m)/2m) on the principal branch.
    Complex lower_factor() const { return branch_sqrt((p0_ - m_) / (2.0 * m_)); }

    Complex momentum_magnitude() const { return 2.0 * m_ * upper_factor() * lower_factor(); }

    /// Real four-momentum; only defined in the real region.
    FourVector momentum() const
    {
        require(Region::real, "momentum");
        const Vector3 p = momentum_magnitude().real() * nhat_;
        return {p0_, p.x(), p.y(), p.z()};
    }

    /// p-slash including the complex continuation inside |p0| < m.
    MatrixC4 momentum_slash() const
    {
        return p0_ * gamma(0) - momentum_magnitude() * spatial_gamma_dot(nhat_);
    }

    /// Same mass and axis with p0 -> -p0.
    KinematicPoint negated_energy() const { return {m_, -p0_, nhat_}; }

    void require(Region r, const char* who) const
    {
        if (in_region(r))
            return;
        const std::string where = r == Region::real ? "|p0| >= m (use the breve constructors inside)"
                                                    : "|p0| <= m (use the real-region constructors outside)";
        throw RegionError(std::string(who) + ": p0=" + std::to_string(p0_) +
                          ", m=" + std::to_string(m_) + " not in region " + where);
    }

private:
    double m_;
    double p0_;
    Vector3 nhat_;
};

/// Rapidity and axis of a pure boost.
struct BoostParams {
    double chi = 0.0;
    Vector3 nhat = Vector3::UnitZ();

    /// cosh(chi) = p0/m; requires p0 >= m.
    static BoostParams from(const KinematicPoint& k)
    {
        if (k.p0() < k.m())
            throw RegionError("boost parameters need p0 >= m");
        return {std::acosh(k.p0() / k.m()), k.nhat()};
    }
};

}  // namespace dirac
