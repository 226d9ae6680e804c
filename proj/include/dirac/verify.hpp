#pragma once

// Registry of named identities over the spinor and projector constructions.
//
// Each IdentityCheck produces a (lhs, rhs) pair at a sampled point; the runner
// takes the largest elementwise residual over all samples. Expected statuses
// were fixed by evaluating every check against independent brute-force
// builders (see tests/oracle.hpp); entries marked expected_fail document
// relations that do not hold numerically under the conventions in
// use, and are kept so their residuals stay visible in every report.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dirac/clifford.hpp"
#include "dirac/kinematics.hpp"
#include "dirac/projectors.hpp"
#include "dirac/sampling.hpp"
#include "dirac/spinors.hpp"

#ifndef DIRAC_VERSION_STRING
#define DIRAC_VERSION_STRING "1.0.0"
#endif

namespace dirac {

inline constexpr double kDefaultTolerance = 1e-10;

enum class ExpectedStatus { holds, informational, expected_fail };
enum class CheckStatus { pass, fail, info };

inline constexpr std::string_view to_string(ExpectedStatus s) noexcept
{
    switch (s) {
    case ExpectedStatus::holds: return "holds";
    case ExpectedStatus::informational: return "informational";
    case ExpectedStatus::expected_fail: return "expected-fail";
    }
    return "unknown";
}

inline constexpr std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
    }
    return "unknown";
}

/// Choices that change numeric values of some checks.
struct Conventions {
    SpatialGammaIndex spatial_index = SpatialGammaIndex::upper;
    double mass = 1.0;
};

using Value = Eigen::MatrixXcd;

struct Sides {
    Value lhs;
    Value rhs;
};

struct IdentityCheck {
    std::string name;
    std::string reference;  ///< the relation being checked, as a formula
    Domain domain = Domain::fixed;
    std::function<Sides(const SamplePoint&, const Conventions&)> sides;
    std::optional<double> tolerance;  ///< falls back to the run's default
    ExpectedStatus expected = ExpectedStatus::holds;
};

struct CheckResult {
    std::string name;
    std::string reference;
    Domain domain = Domain::fixed;
    int samples = 0;
    double tolerance = kDefaultTolerance;
    double max_residual = 0.0;
    SamplePoint worst_point;
    ExpectedStatus expected = ExpectedStatus::holds;
    CheckStatus status = CheckStatus::pass;
};

struct RunOptions {
    std::uint64_t seed = 42;
    int samples = 100;
    std::optional<double> tolerance_override;
    Conventions conventions;
    bool parallel = true;
};

struct VerificationReport {
    std::string version = DIRAC_VERSION_STRING;
    std::uint64_t seed = 0;
    int samples = 0;
    double tolerance = kDefaultTolerance;
    Conventions conventions;
    std::vector<std::string> notes;
    std::vector<CheckResult> checks;

    bool any_failed() const
    {
        return std::any_of(checks.begin(), checks.end(),
                           [](const CheckResult& r) { return r.status == CheckStatus::fail; });
    }
};

/// x_l = xi^+ (sigma_l gamma5) xi and x^l = xi^+ (gamma5 (sigma_l^T)^+) xi with
/// sigma_l the generalized Pauli matrix sigma^+_l. Returns
/// (sum_l x^l x_l, |xi|^4) with |xi|^2 = sum_nu |xi_nu|^2.
struct TwoValued {
    Complex lhs;
    double rhs;
};

inline TwoValued section4_two_valued(const Bispinor& xi)
{
    Complex lhs = 0.0;
    for (int l = 1; l <= 3; ++l) {
        const MatrixC4 sl = generalized_pauli(l, Sign::plus);
        const Complex lower = (xi.adjoint() * (sl * gamma5()) * xi)(0, 0);
        const Complex upper = (xi.adjoint() * (gamma5() * sl.transpose().adjoint()) * xi)(0, 0);
        lhs += upper * lower;
    }
    const double n2 = xi.squaredNorm();
    return {lhs, n2 * n2};
}

namespace detail {

inline Value hstack(const std::vector<Value>& parts)
{
    if (parts.empty())
        return Value(0, 0);
    Eigen::Index cols = 0;
    for (const auto& p : parts)
        cols += p.cols();
    Value out(parts.front().rows(), cols);
    Eigen::Index at = 0;
    for (const auto& p : parts) {
        out.middleCols(at, p.cols()) = p;
        at += p.cols();
    }
    return out;
}

inline Value scalar(Complex z)
{
    Value v(1, 1);
    v(0, 0) = z;
    return v;
}

inline Value zeros_like(const Value& v) { return Value::Zero(v.rows(), v.cols()); }

inline KinematicPoint rest_point(const Conventions& c) { return KinematicPoint::at_rest(c.mass); }

// Helicity-pair matrix [f(l, l')] for l, l' in {+1/2, -1/2}.
template <typename F>
Value helicity_matrix(F&& f)
{
    Value v(2, 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            v(a, b) = f(kHelicities[a], kHelicities[b]);
    return v;
}

inline std::vector<IdentityCheck> build_registry()
{
    using ES = ExpectedStatus;
    std::vector<IdentityCheck> r;
    auto add = [&r](std::string name, std::string ref, Domain d, std::optional<double> tol, ES es,
                    std::function<Sides(const SamplePoint&, const Conventions&)> f) {
        r.push_back({std::move(name), std::move(ref), d, std::move(f), tol, es});
    };

    // ---- gamma algebra ----------------------------------------------------

    add("anticommutator-minkowski", "{gamma^mu, gamma^nu} = 2 g^{mu nu}, g = diag(+1,-1,-1,-1)",
        Domain::fixed, 1e-14, ES::holds, [](const SamplePoint&, const Conventions&) {
            std::vector<Value> l, rr;
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    l.push_back(gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu));
                    rr.push_back((mu == nu ? 2.0 * metric(mu) : 0.0) * MatrixC4::Identity());
                }
            return Sides{hstack(l), hstack(rr)};
        });

    add("anticommutator-literal-delta", "{gamma_mu, gamma_nu} = 2 delta_{mu nu} (Euclidean form)",
        Domain::fixed, std::nullopt, ES::expected_fail, [](const SamplePoint&, const Conventions&) {
            std::vector<Value> l, rr;
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    const MatrixC4 a = gamma_lower(mu), b = gamma_lower(nu);
                    l.push_back(a * b + b * a);
                    rr.push_back((mu == nu ? 2.0 : 0.0) * MatrixC4::Identity());
                }
            return Sides{hstack(l), hstack(rr)};
        });

    add("gamma-hermiticity", "gamma^0+ = gamma^0, gamma^i+ = -gamma^i, gamma5+ = gamma5",
        Domain::fixed, 1e-14, ES::holds, [](const SamplePoint&, const Conventions&) {
            return Sides{hstack({gamma(0).adjoint(), gamma(1).adjoint(), gamma(2).adjoint(),
                                 gamma(3).adjoint(), gamma5().adjoint()}),
                         hstack({gamma(0), -gamma(1), -gamma(2), -gamma(3), gamma5()})};
        });

    add("gamma5-pseudoscalar",
        "i gamma^0 gamma^1 gamma^2 gamma^3 = -(i/4!) eps_{mu nu s r} gamma^mu gamma^nu gamma^s gamma^r, eps^{0123} = +1",
        Domain::fixed, 1e-14, ES::holds, [](const SamplePoint&, const Conventions&) {
            return Sides{Value(gamma5()), Value(gamma5_from_epsilon(kEpsilonLower0123))};
        });

    add("gamma5-epsilon-lower-plus",
        "i gamma^0 gamma^1 gamma^2 gamma^3 = -(i/4!) eps_{mu nu s r} gamma^mu ... with eps_{0123} = +1",
        Domain::fixed, std::nullopt, ES::expected_fail, [](const SamplePoint&, const Conventions&) {
            return Sides{Value(gamma5()), Value(gamma5_from_epsilon(+1))};
        });

    add("trace-cyclicity", "tr(ABC) = tr(CAB)", Domain::matrices, 1e-14, ES::holds,
        [](const SamplePoint& s, const Conventions&) {
            const auto& [a, b, c] = s.mats;
            return Sides{scalar(trace({a, b, c})), scalar(trace({c, a, b}))};
        });

    add("generalized-pauli", "sigma^+_l = 2 diag(sigma_l, sigma_l), sigma^-_l = -sigma^+_l",
        Domain::fixed, 1e-14, ES::holds, [](const SamplePoint&, const Conventions&) {
            std::vector<Value> l, rr;
            for (int k = 1; k <= 3; ++k) {
                MatrixC4 d = MatrixC4::Zero();
                d.topLeftCorner<2, 2>() = 2.0 * pauli(k);
                d.bottomRightCorner<2, 2>() = 2.0 * pauli(k);
                l.push_back(generalized_pauli(k, Sign::plus));
                l.push_back(generalized_pauli(k, Sign::minus));
                rr.push_back(d);
                rr.push_back(-d);
            }
            return Sides{hstack(l), hstack(rr)};
        });

    // ---- spinors on |p0| >= m --------------------------------------------

    add("norm-spinor", "u-bar^l(p) u^l'(p) = delta_{l l'}", Domain::on_shell, 1e-12, ES::holds,
        [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            Value l = helicity_matrix([&](Helicity a, Helicity b) {
                return (dirac_adjoint(psi_minus(k, a, a)) * psi_minus(k, b, b))(0, 0);
            });
            return Sides{l, Value::Identity(2, 2)};
        });

    add("invariant-product", "xi-dot^+(p,l) xi(p,l') = delta_{l l'}", Domain::on_shell, 1e-12,
        ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            Value l = helicity_matrix([&](Helicity a, Helicity b) {
                return (xi(k, a, true).adjoint() * xi(k, b, false))(0, 0);
            });
            return Sides{l, Value::Identity(2, 2)};
        });

    add("boost-equivalence", "xi(p,l) = exp(+-(chi/2) sigma.n) phi_l, cosh chi = p0/m",
        Domain::on_shell, 1e-12, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            const auto b = BoostParams::from(k);
            std::vector<Value> l, rr;
            for (Helicity h : kHelicities)
                for (bool dotted : {false, true}) {
                    l.push_back(xi(k, h, dotted));
                    rr.push_back(boost_two_spinor(basis_two_spinor(h), b, dotted));
                }
            return Sides{hstack(l), hstack(rr)};
        });

    add("parity-closed-form",
        "(xi + xi-dot)/2 = sqrt((p0+m)/2m) phi, (xi - xi-dot)/2 = (sigma.n) sqrt((p0-m)/2m) phi",
        Domain::on_shell, 1e-12, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            std::vector<Value> l, rr;
            for (Helicity h : kHelicities) {
                const auto ps = parity_spinors(xi(k, h, false), xi(k, h, true));
                const TwoSpinor phi = basis_two_spinor(h);
                l.push_back(ps.positive);
                l.push_back(ps.negative);
                rr.push_back(k.upper_factor() * phi);
                rr.push_back(k.lower_factor() * (sigma_dot(k.nhat()) * phi));
            }
            return Sides{hstack(l), hstack(rr)};
        });

    add("helicity-sum-unity", "P(n) + P(-n) = 1, P(n) = (1 + sigma.n)/2", Domain::direction, 1e-14,
        ES::holds, [](const SamplePoint& s, const Conventions&) {
            return Sides{Value(spin_projector_rest(s.nhat) + spin_projector_rest(-s.nhat)),
                         Value::Identity(2, 2)};
        });

    add("polsum-spinor", "sum_l u^l(p) u-bar^l(p) = (p-slash + m)/2m", Domain::on_shell, 1e-12,
        ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto ps = polsum(PolsumKind::spinor, s.kinematics());
            return Sides{ps.lhs, ps.rhs};
        });

    add("polsum-antispinor", "sum_l u^l(-p) u-bar^l(-p) = (m - p-slash)/2m", Domain::on_shell,
        1e-12, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto ps = polsum(PolsumKind::antispinor, s.kinematics());
            return Sides{ps.lhs, ps.rhs};
        });

    add("polsum-antispinor-conjugated",
        "sum_l u(-p) u(-p)^+ gamma^0 = (m - p-slash)/2m with the conjugating adjoint",
        Domain::on_shell, std::nullopt, ES::expected_fail,
        [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            const auto neg = k.negated_energy();
            MatrixC4 lhs = MatrixC4::Zero();
            for (Helicity h : kHelicities)
                lhs += diad(psi_minus(neg, h, h), DiadInsert::gamma0);
            return Sides{lhs, energy_projector(k, Sign::minus).matrix};
        });

    add("unity-decomposition-gamma0", "sum_Phi' |Phi'> gamma_0 <Phi'| = 1, Phi' = u+ at p0 = -m",
        Domain::fixed, std::nullopt, ES::expected_fail, [](const SamplePoint&, const Conventions& c) {
            const KinematicPoint k(c.mass, -c.mass);
            MatrixC4 sum = MatrixC4::Zero();
            for (int t = 1; t <= 4; ++t)
                sum += diad(bispinor_u_plus(k, TetradIndex(t), Sign::plus), DiadInsert::gamma0);
            return Sides{sum, Value::Identity(4, 4)};
        });

    add("kappa-boundary", "kappa(p0 = m) = 0, kappa = sqrt((p0-m)/(p0+m))", Domain::fixed, 1e-14,
        ES::holds, [](const SamplePoint&, const Conventions& c) {
            return Sides{scalar(kappa(c.mass, c.mass)), scalar(0.0)};
        });

    // ---- projectors -------------------------------------------------------

    add("spin-projector-algebra", "P(s)^2 = P(s), P(s) + P(-s) = 1, P(s) P(-s) = 0",
        Domain::direction, 1e-12, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const SpinVector sv(s.nhat);
            const MatrixC4 p = spin_projector(sv).matrix;
            const MatrixC4 q = spin_projector(-sv).matrix;
            return Sides{hstack({p * p, p + q, p * q}),
                         hstack({p, MatrixC4::Identity(), MatrixC4::Zero()})};
        });

    add("tetrad-projector-sum", "sum_{tau=1..4} P(s^tau)/2 = 1", Domain::direction, 1e-12,
        ES::holds, [](const SamplePoint& s, const Conventions&) {
            MatrixC4 sum = MatrixC4::Zero();
            for (int t = 1; t <= 4; ++t)
                sum += 0.5 * spin_projector(tetrad_spin_vector(TetradIndex(t), s.nhat)).matrix;
            return Sides{sum, Value::Identity(4, 4)};
        });

    add("energy-projector-algebra", "L+ L- = 0, L+^2 = L+, L-^2 = L-", Domain::on_shell, 1e-12,
        ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            const MatrixC4 lp = energy_projector(k, Sign::plus).matrix;
            const MatrixC4 lm = energy_projector(k, Sign::minus).matrix;
            return Sides{hstack({lp * lm, lp * lp, lm * lm}), hstack({MatrixC4::Zero(), lp, lm})};
        });

    add("spin-energy-commute", "[P(s), L+-] = 0 for s.p = 0", Domain::on_shell, 1e-12, ES::holds,
        [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            const MatrixC4 ps = spin_projector(SpinVector(s.transverse)).matrix;
            std::vector<Value> l;
            for (Sign sg : {Sign::plus, Sign::minus}) {
                const MatrixC4 e = energy_projector(k, sg).matrix;
                l.push_back(ps * e - e * ps);
            }
            Value lhs = hstack(l);
            return Sides{lhs, zeros_like(lhs)};
        });

    add("completeness", "L+ + L- = (p-slash + m)/2m + (m - p-slash)/2m = 1", Domain::on_shell,
        1e-12, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto ps = polsum(PolsumKind::completeness, s.kinematics());
            return Sides{ps.lhs, ps.rhs};
        });

    add("section4-projector-equivalence",
        "(1 + gamma5 s^mu gamma_mu)/2 = diag((1 + sigma.s)/2, (1 - sigma.s)/2), s = (0, s)",
        Domain::direction, 1e-12, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const FourVector sv = FourVector::spatial(s.nhat);
            MatrixC4 contracted = MatrixC4::Zero();
            for (int mu = 0; mu < 4; ++mu)
                contracted += sv[mu] * gamma_lower(mu);
            const MatrixC4 lhs = 0.5 * (MatrixC4::Identity() + gamma5() * contracted);
            MatrixC4 rhs = MatrixC4::Zero();
            rhs.topLeftCorner<2, 2>() = spin_projector_rest(s.nhat);
            rhs.bottomRightCorner<2, 2>() = spin_projector_rest(-s.nhat);
            return Sides{lhs, rhs};
        });

    // ---- rest bases and the breve bispinor --------------------------------

    add("rest-eigenvalues",
        "diag(sigma.n, -sigma.n) e_tau/sqrt2 = (+1, -1, -1, +1)_tau e_tau/sqrt2, n = z",
        Domain::fixed, 0.0, ES::holds, [](const SamplePoint&, const Conventions&) {
            MatrixC4 op = MatrixC4::Zero();
            const MatrixC2 sn = sigma_dot(Vector3::UnitZ());
            op.topLeftCorner<2, 2>() = sn;
            op.bottomRightCorner<2, 2>() = -sn;
            constexpr double signs[4] = {+1.0, -1.0, -1.0, +1.0};
            std::vector<Value> l, rr;
            for (int t = 1; t <= 4; ++t) {
                const Bispinor e = rest_basis(TetradIndex(t));
                l.push_back(op * e);
                rr.push_back(signs[t - 1] * e);
            }
            return Sides{hstack(l), hstack(rr)};
        });

    add("breve-rest-basis-relation", "breve u(p0 = 0, n = z, l, l) vs e_tau/sqrt2, tau = 1, 2",
        Domain::fixed, std::nullopt, ES::informational, [](const SamplePoint&, const Conventions& c) {
            const KinematicPoint k(c.mass, 0.0);
            return Sides{hstack({breve_u(k, Helicity::up, Helicity::up),
                                 breve_u(k, Helicity::down, Helicity::down)}),
                         hstack({rest_basis(TetradIndex(1)), rest_basis(TetradIndex(2))})};
        });

    add("breve-norm", "breve-u-bar breve-u = 2 for lambda+ = lambda-", Domain::breve, 1e-12,
        ES::holds, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            Value l(1, 2);
            for (int a = 0; a < 2; ++a) {
                const Helicity h = kHelicities[a];
                l(0, a) = (breve_u_bar(k, h, h) * breve_u(k, h, h))(0, 0);
            }
            return Sides{l, Value::Constant(1, 2, 2.0)};
        });

    add("breve-norm-mixed-helicity", "breve-u-bar breve-u = 2 for lambda+ != lambda-",
        Domain::breve, std::nullopt, ES::informational, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            Value l(1, 2);
            for (int a = 0; a < 2; ++a) {
                const Helicity h = kHelicities[a];
                l(0, a) = (breve_u_bar(k, h, opposite(h)) * breve_u(k, h, opposite(h)))(0, 0);
            }
            return Sides{l, Value::Constant(1, 2, 2.0)};
        });

    add("adjoint-dirac", "breve-u-bar (p-slash + m) = 0", Domain::breve, std::nullopt,
        ES::expected_fail, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            const MatrixC4 op = k.momentum_slash() + k.m() * MatrixC4::Identity();
            std::vector<Value> l;
            for (Helicity h : kHelicities)
                l.push_back(breve_u_bar(k, h, h) * op);
            Value lhs = hstack(l);
            return Sides{lhs, zeros_like(lhs)};
        });

    add("adjoint-dirac-standard-sign",
        "breve-u-bar (p-slash - m) = 0, from p-slash^+ = gamma0 p0 + gamma.p", Domain::breve,
        std::nullopt, ES::expected_fail, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            const MatrixC4 op = k.momentum_slash() - k.m() * MatrixC4::Identity();
            std::vector<Value> l;
            for (Helicity h : kHelicities)
                l.push_back(breve_u_bar(k, h, h) * op);
            Value lhs = hstack(l);
            return Sides{lhs, zeros_like(lhs)};
        });

    add("diad-half-unity", "sum_Phi' |Phi'> gamma_5 <Phi'| = 1/2, Phi' = e_tau/sqrt2",
        Domain::fixed, std::nullopt, ES::expected_fail, [](const SamplePoint&, const Conventions&) {
            MatrixC4 sum = MatrixC4::Zero();
            for (int t = 1; t <= 4; ++t)
                sum += diad(rest_basis(TetradIndex(t)), DiadInsert::gamma5);
            return Sides{sum, Value(0.5 * MatrixC4::Identity())};
        });

    add("polsum-breve-plus", "sum_{lambda+} breve-u breve-u-bar = (p-slash + m)/2m", Domain::breve,
        std::nullopt, ES::expected_fail, [](const SamplePoint& s, const Conventions&) {
            const auto ps = polsum(PolsumKind::breve_plus, s.kinematics());
            return Sides{ps.lhs, ps.rhs};
        });

    add("polsum-breve-minus", "sum_{lambda-} breve-u breve-u-bar = (m - p-slash)/2m",
        Domain::breve, std::nullopt, ES::expected_fail, [](const SamplePoint& s, const Conventions&) {
            const auto ps = polsum(PolsumKind::breve_minus, s.kinematics());
            return Sides{ps.lhs, ps.rhs};
        });

    add("completeness-breve-blocks", "sum_{lambda+} + sum_{lambda-} breve-u breve-u-bar = 1",
        Domain::breve, std::nullopt, ES::informational, [](const SamplePoint& s, const Conventions&) {
            const auto k = s.kinematics();
            return Sides{breve_block_sum(k, true) + breve_block_sum(k, false),
                         Value::Identity(4, 4)};
        });

    add("pi-rest-projector",
        "pi(p = (m,0,0,0), s = z) = diag(0,0,0,1) and pi^2 = pi (upper-index gamma.s)",
        Domain::fixed, 1e-12, ES::holds, [](const SamplePoint&, const Conventions& c) {
            const auto k = rest_point(c);
            const MatrixC4 pi =
                pi_projector(k, SpinVector(Vector3::UnitZ()), PiVariant::lambda, c.spatial_index).matrix;
            MatrixC4 expected = MatrixC4::Zero();
            // lowering the spatial index flips gamma.s and moves the surviving entry
            if (c.spatial_index == SpatialGammaIndex::upper)
                expected(3, 3) = 1.0;
            else
                expected(2, 2) = 1.0;
            return Sides{hstack({pi, pi * pi}), hstack({expected, expected})};
        });

    add("pi-annihilation", "pi^l(p) breve-u^l(p) = 0, s = n", Domain::breve, std::nullopt,
        ES::expected_fail, [](const SamplePoint& s, const Conventions& c) {
            const auto k = s.kinematics();
            const MatrixC4 pi = pi_projector(k, SpinVector(s.nhat), PiVariant::lambda, c.spatial_index).matrix;
            std::vector<Value> l;
            for (Helicity h : kHelicities)
                l.push_back(pi * breve_u(k, h, h));
            Value lhs = hstack(l);
            return Sides{lhs, zeros_like(lhs)};
        });

    add("spinor-breve-maps", "u^l(p) = gamma5 (gamma.s) breve-u^l(p) at p0 = m, s = (0, n)",
        Domain::direction, std::nullopt, ES::expected_fail, [](const SamplePoint& s, const Conventions& c) {
            const auto k = s.kinematics();
            const FourVector sv = FourVector::spatial(s.nhat);
            std::vector<Value> l, rr;
            for (Helicity h : kHelicities) {
                l.push_back(spinor_from_breve(breve_u(k, h, h), sv, SpinorVariant::u, c.spatial_index));
                rr.push_back(psi_minus(k, h, h));
            }
            return Sides{hstack(l), hstack(rr)};
        });

    add("spinor-breve-map-inverse", "(gamma.s) gamma5 gamma5 (gamma.s) breve-u = -breve-u",
        Domain::breve, 1e-12, ES::holds, [](const SamplePoint& s, const Conventions& c) {
            const auto k = s.kinematics();
            const FourVector sv = FourVector::spatial(s.nhat);
            std::vector<Value> l, rr;
            for (Helicity h : kHelicities) {
                const Bispinor b = breve_u(k, h, h);
                const Bispinor u = spinor_from_breve(b, sv, SpinorVariant::u, c.spatial_index);
                l.push_back(spinor_from_breve(u, sv, SpinorVariant::v, c.spatial_index));
                rr.push_back(-b);
            }
            return Sides{hstack(l), hstack(rr)};
        });

    // ---- two-valuedness of the bispinor representation ----------------------

    add("section4-two-valued", "sum_l x^l x_l = |xi|^4", Domain::spinor, std::nullopt,
        ES::expected_fail, [](const SamplePoint& s, const Conventions&) {
            const auto tv = section4_two_valued(s.xi);
            return Sides{scalar(tv.lhs), scalar(tv.rhs)};
        });

    add("section4-quartic-homogeneity", "lhs(alpha xi) = |alpha|^4 lhs(xi), relative",
        Domain::spinor, 1e-10, ES::holds, [](const SamplePoint& s, const Conventions&) {
            const Complex scaled = section4_two_valued(s.alpha * s.xi).lhs;
            const double a4 = std::pow(std::abs(s.alpha), 4);
            const Complex base = a4 * section4_two_valued(s.xi).lhs;
            const double scale = std::max(std::abs(base), std::numeric_limits<double>::min());
            return Sides{scalar(scaled / scale), scalar(base / scale)};
        });

    return r;
}

inline double residual(const Sides& s)
{
    if (s.lhs.rows() != s.rhs.rows() || s.lhs.cols() != s.rhs.cols())
        throw ConfigurationError("lhs/rhs shape mismatch");
    double worst = 0.0;
    for (Eigen::Index i = 0; i < s.lhs.size(); ++i) {
        const double d = std::abs(s.lhs(i) - s.rhs(i));
        if (std::isnan(d))
            return std::numeric_limits<double>::infinity();
        worst = std::max(worst, d);
    }
    return worst;
}

}  // namespace detail

/// Every registered identity, in report order.
inline const std::vector<IdentityCheck>& registry()
{
    static const std::vector<IdentityCheck> checks = detail::build_registry();
    return checks;
}

inline const IdentityCheck& find_check(std::string_view name)
{
    for (const auto& c : registry())
        if (c.name == name)
            return c;
    throw ConfigurationError("no registered check named '" + std::string(name) + "'");
}

/// Evaluates one check. Fixed-domain checks are evaluated once regardless of
/// `samples`.
inline CheckResult run_check(const IdentityCheck& check, std::uint64_t seed, int samples,
                             const Conventions& conventions = {},
                             std::optional<double> tolerance_override = std::nullopt,
                             double default_tolerance = kDefaultTolerance)
{
    if (samples < 1)
        throw ConfigurationError("check '" + check.name + "': samples must be >= 1");
    if (!check.sides)
        throw ConfigurationError("check '" + check.name + "': no builder");

    CheckResult res;
    res.name = check.name;
    res.reference = check.reference;
    res.domain = check.domain;
    res.expected = check.expected;
    res.tolerance = tolerance_override.value_or(check.tolerance.value_or(default_tolerance));

    const int n = check.domain == Domain::fixed ? 1 : samples;
    SampleRng rng(seed, check.name);
    bool first = true;
    for (int i = 0; i < n; ++i) {
        const SamplePoint pt = draw_sample(check.domain, rng, conventions.mass);
        double r = 0.0;
        try {
            r = detail::residual(check.sides(pt, conventions));
        } catch (const ConfigurationError& e) {
            throw ConfigurationError("check '" + check.name + "': " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ConfigurationError("check '" + check.name + "': " + e.what());
        } catch (const std::domain_error& e) {
            throw ConfigurationError("check '" + check.name + "': sampler/region mismatch: " +
                                     e.what());
        }
        if (first || r > res.max_residual) {
            res.max_residual = r;
            res.worst_point = pt;
            first = false;
        }
    }
    res.samples = n;

    if (check.expected == ExpectedStatus::holds)
        res.status = res.max_residual <= res.tolerance ? CheckStatus::pass : CheckStatus::fail;
    else
        res.status = CheckStatus::info;
    return res;
}

inline std::vector<std::string> report_notes()
{
    return {
        "kappa = sqrt((p0-m)/(p0+m)) equals 0 at p0 = m, so the rest-frame tetrad bispinors are not "
        "spin eigenstates with kappa = +-1; recorded here rather than as a residual check",
        "expected-fail checks evaluate relations that do not hold numerically under the "
        "conventions above; their residuals are reported with status info",
        "adjoint-dirac and adjoint-dirac-standard-sign evaluate both overall signs of p-slash^+",
        "pi-projector gamma.s is a 4x4 spatial contraction; the 2x2 sigma.s reading is not used",
    };
}

/// Runs every registered check in registry order. Checks may run in parallel;
/// results are assembled in order, so the report does not depend on scheduling.
inline VerificationReport run_all(const RunOptions& opt)
{
    if (opt.samples < 1)
        throw ConfigurationError("samples must be >= 1");
    if (opt.tolerance_override && !(*opt.tolerance_override > 0.0))
        throw ConfigurationError("tolerance must be > 0");
    if (!(opt.conventions.mass > 0.0))
        throw ConfigurationError("mass must be > 0");

    VerificationReport rep;
    rep.seed = opt.seed;
    rep.samples = opt.samples;
    rep.tolerance = opt.tolerance_override.value_or(kDefaultTolerance);
    rep.conventions = opt.conventions;
    rep.notes = report_notes();

    const auto& checks = registry();
    auto one = [&](const IdentityCheck& c) {
        return run_check(c, opt.seed, opt.samples, opt.conventions, opt.tolerance_override);
    };
    if (opt.parallel) {
        std::vector<std::future<CheckResult>> pending;
        pending.reserve(checks.size());
        for (const auto& c : checks)
            pending.push_back(std::async(std::launch::async, one, std::cref(c)));
        for (auto& f : pending)
            rep.checks.push_back(f.get());
    } else {
        for (const auto& c : checks)
            rep.checks.push_back(one(c));
    }
    return rep;
}

}  // namespace dirac
