#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dirac/spinors.hpp"
#include "test_util.hpp"

using namespace dirac;
using testutil::to_eigen;
using testutil::to_eigen_row;

namespace {

const double r2 = std::sqrt(2.0);

Bispinor b4(Complex a, Complex b, Complex c, Complex d) { return {a, b, c, d}; }

struct Draw {
    double m, p0;
    Vector3 n;
};

// on-shell points with p0/m in [1, 10]
std::vector<Draw> on_shell_points(int count, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> g;
    std::vector<Draw> out;
    for (int i = 0; i < count; ++i) {
        const double m = 0.5 + 2.0 * u(rng);
        out.push_back({m, m * (1.0 + 9.0 * u(rng)), Vector3(g(rng), g(rng), g(rng)).normalized()});
    }
    return out;
}

std::vector<Draw> breve_points(int count, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::normal_distribution<double> g;
    std::vector<Draw> out;
    for (int i = 0; i < count; ++i) {
        const double m = 1.0 + 0.5 * u(rng);
        out.push_back({m, m * u(rng), Vector3(g(rng), g(rng), g(rng)).normalized()});
    }
    return out;
}

}  // namespace

TEST(BranchSqrt, PrincipalBranch)
{
    EXPECT_EQ(branch_sqrt(4.0), Complex(2.0, 0.0));
    EXPECT_EQ(branch_sqrt(-4.0), Complex(0.0, 2.0));
    EXPECT_EQ(branch_sqrt(0.0), Complex(0.0, 0.0));
    const Complex z = branch_sqrt(-0.0);
    EXPECT_EQ(z.real(), 0.0);
    EXPECT_FALSE(std::signbit(z.imag()));
}

TEST(Kinematics, MomentumMagnitudeContinuation)
{
    const KinematicPoint a(1.0, 1.25);
    EXPECT_NEAR(std::abs(a.momentum_magnitude() - Complex(0.75, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a.negated_energy().momentum_magnitude() - Complex(-0.75, 0)), 0.0, 1e-15);
    const KinematicPoint b(1.0, 0.6);
    EXPECT_NEAR(std::abs(b.momentum_magnitude() - Complex(0, 0.8)), 0.0, 1e-15);
    // p-slash squares to m^2 in every region
    for (double p0 : {-3.0, -1.0, -0.4, 0.0, 0.7, 1.0, 2.5}) {
        const KinematicPoint k(1.0, p0, Vector3(1, 2, 2) / 3.0);
        EXPECT_MAT_NEAR(k.momentum_slash() * k.momentum_slash(), MatrixC4::Identity(), 1e-13) << p0;
    }
}

TEST(Kinematics, RejectsBadInput)
{
    EXPECT_THROW(KinematicPoint(0.0, 1.0), InvalidArgument);
    EXPECT_THROW(KinematicPoint(-1.0, 1.0), InvalidArgument);
    EXPECT_THROW(KinematicPoint(1.0, NAN), InvalidArgument);
    EXPECT_THROW(KinematicPoint(1.0, 1.0, Vector3(1, 1, 0)), InvalidArgument);
    EXPECT_THROW(TetradIndex(0), InvalidArgument);
    EXPECT_THROW(TetradIndex(5), InvalidArgument);
    EXPECT_THROW(KinematicPoint(1.0, 0.5).momentum(), RegionError);
}

TEST(TwoSpinor, BasisExamples)
{
    EXPECT_MAT_NEAR(basis_two_spinor(Helicity::up), TwoSpinor(1, 0), 0.0);
    EXPECT_MAT_NEAR(basis_two_spinor(Helicity::down), TwoSpinor(0, 1), 0.0);
    EXPECT_EQ(basis_two_spinor(Helicity::up).dot(basis_two_spinor(Helicity::down)), Complex(0.0));
}

TEST(Xi, Examples)
{
    const KinematicPoint rest(1.0, 1.0, Vector3(0, 0.6, 0.8));
    EXPECT_MAT_NEAR(xi(rest, Helicity::up, false), TwoSpinor(1, 0), 1e-15);
    const KinematicPoint k(1.0, 1.25);
    EXPECT_MAT_NEAR(xi(k, Helicity::up, false), TwoSpinor(r2, 0), 1e-15);
    EXPECT_MAT_NEAR(xi(k, Helicity::up, true), TwoSpinor(1 / r2, 0), 1e-15);
}

TEST(Xi, RegionError)
{
    EXPECT_THROW(xi(KinematicPoint(1.0, 0.5), Helicity::up, false), RegionError);
}

TEST(Boost, Examples)
{
    const TwoSpinor phi(0.3, Complex(0.1, -0.7));
    EXPECT_MAT_NEAR(boost_two_spinor(phi, BoostParams{0.0, Vector3::UnitX()}, false), phi, 0.0);
    const KinematicPoint k(1.0, 1.25);
    EXPECT_MAT_NEAR(boost_two_spinor(basis_two_spinor(Helicity::up), BoostParams::from(k), false),
                    xi(k, Helicity::up, false), 1e-14);
    EXPECT_THROW(BoostParams::from(KinematicPoint(1.0, 0.9)), RegionError);
}

TEST(Boost, InvariantProductPreserved)
{
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int i = 0; i < 50; ++i) {
        const TwoSpinor a(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        const TwoSpinor b(Complex(u(rng), u(rng)), Complex(u(rng), u(rng)));
        const BoostParams p{3.0 * std::abs(u(rng)), Vector3(u(rng), u(rng), u(rng) + 2).normalized()};
        const Complex before = a.adjoint() * b;
        const Complex after = boost_two_spinor(a, p, true).adjoint() * boost_two_spinor(b, p, false);
        EXPECT_LE(std::abs(after - before), 1e-12);
    }
}

TEST(Parity, Examples)
{
    const TwoSpinor x(Complex(0.2, 1), 3);
    EXPECT_MAT_NEAR(parity_spinors(x, x).negative, TwoSpinor::Zero(), 0.0);
    const KinematicPoint k(1.0, 1.25);
    const TwoSpinor a = xi(k, Helicity::up, false), d = xi(k, Helicity::up, true);
    const auto ps = parity_spinors(a, d);
    EXPECT_MAT_NEAR(ps.positive, TwoSpinor(std::sqrt(1.125), 0), 1e-15);
    EXPECT_MAT_NEAR(ps.negative, TwoSpinor(std::sqrt(0.125), 0), 1e-15);
    EXPECT_MAT_NEAR(ps.positive + ps.negative, a, 1e-15);
}

TEST(BispinorU, Examples)
{
    const KinematicPoint rest(1.0, 1.0);
    EXPECT_MAT_NEAR(bispinor_u(rest, TetradIndex(1)), b4(1, 0, 0, 0), 0.0);
    EXPECT_MAT_NEAR(bispinor_u(rest, TetradIndex(3)), b4(0, 0, 0, 0), 0.0);
    EXPECT_MAT_NEAR(bispinor_u(KinematicPoint(1.0, 1.25), TetradIndex(4)),
                    b4(0, 0, 0, -std::sqrt(0.125)), 1e-15);
    EXPECT_THROW(bispinor_u(KinematicPoint(1.0, 0.2), TetradIndex(1)), RegionError);
}

TEST(BispinorU, PsiMinusMatchesTextbookSpinor)
{
    for (const auto& d : on_shell_points(100, 8))
        for (bool up : {true, false}) {
            const Helicity h = up ? Helicity::up : Helicity::down;
            const Bispinor u = psi_minus(KinematicPoint(d.m, d.p0, d.n), h, h);
            EXPECT_MAT_NEAR(u, to_eigen(oracle::dirac_u(d.m, d.p0, d.n.x(), d.n.y(), d.n.z(), up)),
                            1e-12);
        }
}

TEST(BispinorUPlus, Examples)
{
    const KinematicPoint rest(1.0, 1.0);
    EXPECT_MAT_NEAR(bispinor_u_plus(rest, TetradIndex(1), Sign::plus), b4(0, 0, 0, 0), 0.0);
    EXPECT_MAT_NEAR(bispinor_u_plus(rest, TetradIndex(3), Sign::plus), b4(0, 0, kI, 0), 0.0);
    EXPECT_MAT_NEAR(bispinor_u_plus(rest, TetradIndex(3), Sign::minus), b4(0, 0, -kI, 0), 0.0);
    EXPECT_THROW(bispinor_u_plus(KinematicPoint(1.0, 0.0), TetradIndex(1), Sign::plus), RegionError);
}

TEST(Normalization, OnShell)
{
    for (const auto& d : on_shell_points(100, 1)) {
        const KinematicPoint k(d.m, d.p0, d.n);
        for (Helicity a : kHelicities)
            for (Helicity b : kHelicities) {
                const Complex v = dirac_adjoint(psi_minus(k, a, a)) * psi_minus(k, b, b);
                EXPECT_LE(std::abs(v - (a == b ? 1.0 : 0.0)), 1e-12);
            }
    }
}

TEST(Normalization, DiracAdjointExamples)
{
    EXPECT_MAT_NEAR(dirac_adjoint(b4(1, 0, 0, 0)), to_eigen_row({1, 0, 0, 0}), 0.0);
    EXPECT_MAT_NEAR(dirac_adjoint(b4(0, 0, 1, 0)), to_eigen_row({0, 0, -1, 0}), 0.0);
    const Bispinor u = psi_minus(KinematicPoint(1.0, 1.25), Helicity::up, Helicity::up);
    EXPECT_NEAR(std::abs(Complex(dirac_adjoint(u) * u) - 1.0), 0.0, 1e-15);
}

TEST(Normalization, AnalyticAdjointAgreesAtPositiveEnergy)
{
    for (const auto& d : on_shell_points(20, 2)) {
        const KinematicPoint k(d.m, d.p0, d.n);
        for (Helicity h : kHelicities)
            EXPECT_MAT_NEAR(psi_minus_bar(k, h, h), dirac_adjoint(psi_minus(k, h, h)), 1e-13);
    }
}

TEST(InvariantProduct, PositiveAndNegativeEnergy)
{
    for (const auto& d : on_shell_points(100, 3)) {
        const KinematicPoint k(d.m, d.p0, d.n);
        const KinematicPoint neg = k.negated_energy();
        for (Helicity a : kHelicities)
            for (Helicity b : kHelicities) {
                const double delta = a == b ? 1.0 : 0.0;
                const Complex pos = xi(k, a, true).adjoint() * xi(k, b, false);
                const Complex ng = xi(neg, a, true).adjoint() * xi(neg, b, false);
                EXPECT_LE(std::abs(pos - delta), 1e-12);
                // both boost factors turn imaginary; the product flips sign
                EXPECT_LE(std::abs(ng + delta), 1e-12);
            }
    }
}

TEST(BoostEquivalence, OnShell)
{
    for (const auto& d : on_shell_points(100, 4)) {
        const KinematicPoint k(d.m, d.p0, d.n);
        const auto b = BoostParams::from(k);
        for (Helicity h : kHelicities)
            for (bool dotted : {false, true})
                EXPECT_MAT_NEAR(xi(k, h, dotted), boost_two_spinor(basis_two_spinor(h), b, dotted),
                                1e-12);
    }
}

TEST(Breve, Examples)
{
    const KinematicPoint rest(1.0, 1.0);
    EXPECT_MAT_NEAR(breve_u(rest, Helicity::up, Helicity::up), b4(1, 0, 1, 0), 1e-15);
    const KinematicPoint k0(1.0, 0.0);
    EXPECT_MAT_NEAR(breve_u(k0, Helicity::up, Helicity::up), b4(0, 0, r2, 0), 1e-15);
    EXPECT_THROW(breve_u(KinematicPoint(1.0, 1.5), Helicity::up, Helicity::up), RegionError);
    EXPECT_THROW(breve_u_bar(KinematicPoint(1.0, -1.5), Helicity::up, Helicity::up), RegionError);
}

TEST(Breve, MatchesRealFactorForm)
{
    for (const auto& d : breve_points(100, 5))
        for (bool a : {true, false})
            for (bool b : {true, false}) {
                const KinematicPoint k(d.m, d.p0, d.n);
                const Helicity ha = a ? Helicity::up : Helicity::down;
                const Helicity hb = b ? Helicity::up : Helicity::down;
                const auto nx = d.n.x(), ny = d.n.y(), nz = d.n.z();
                EXPECT_MAT_NEAR(breve_u(k, ha, hb), to_eigen(oracle::breve(d.m, d.p0, nx, ny, nz, a, b)),
                                1e-13);
                EXPECT_MAT_NEAR(breve_u_bar(k, ha, hb),
                                to_eigen_row(oracle::breve_bar(d.m, d.p0, nx, ny, nz, a, b)), 1e-13);
            }
}

TEST(Breve, NormExamples)
{
    auto norm = [](const KinematicPoint& k, Helicity a, Helicity b) {
        return Complex(breve_u_bar(k, a, b) * breve_u(k, a, b));
    };
    EXPECT_NEAR(std::abs(norm(KinematicPoint(1.0, 1.0), Helicity::up, Helicity::up) - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(norm(KinematicPoint(1.0, 0.5), Helicity::down, Helicity::down) - 2.0), 0.0,
                1e-15);
    // mixed helicities, p0 = 0.5, n = z: value from the real-factor oracle
    const auto row = oracle::breve_bar(1.0, 0.5, 0, 0, 1, true, false);
    const auto col = oracle::breve(1.0, 0.5, 0, 0, 1, true, false);
    const Complex frozen = oracle::dot_row(row, col);
    EXPECT_NEAR(frozen.real(), 2.0 - std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(std::abs(norm(KinematicPoint(1.0, 0.5), Helicity::up, Helicity::down) - frozen), 0.0,
                1e-15);
}

TEST(Breve, NormIsTwoForEqualHelicities)
{
    for (const auto& d : breve_points(100, 6)) {
        const KinematicPoint k(d.m, d.p0, d.n);
        for (Helicity h : kHelicities)
            EXPECT_LE(std::abs(Complex(breve_u_bar(k, h, h) * breve_u(k, h, h)) - 2.0), 1e-12);
    }
}

TEST(RestBasis, Examples)
{
    EXPECT_MAT_NEAR(rest_basis(TetradIndex(1)), b4(1 / r2, 0, 0, 0), 0.0);
    EXPECT_MAT_NEAR(rest_basis(TetradIndex(4)), b4(0, 0, 0, 1 / r2), 0.0);
    MatrixC4 sum = MatrixC4::Zero();
    for (int t = 1; t <= 4; ++t) {
        const Bispinor e = rest_basis(TetradIndex(t));
        sum += 2.0 * e * e.adjoint();
    }
    EXPECT_MAT_NEAR(sum, MatrixC4::Identity(), 1e-15);
}

TEST(SpinorFromBreve, Examples)
{
    const FourVector s = FourVector::spatial(Vector3::UnitZ());
    const Bispinor b = b4(0, 0, r2, 0);
    const Bispinor got = spinor_from_breve(b, s, SpinorVariant::u);
    const oracle::V4 want = oracle::mul(oracle::mul(oracle::gamma5_entries(), oracle::gamma_upper(3)),
                                        oracle::V4{0, 0, r2, 0});
    EXPECT_MAT_NEAR(got, to_eigen(want), 1e-15);
    EXPECT_MAT_NEAR(got, b4(0, 0, r2, 0), 1e-15);

    // gamma5 gamma^3 = diag(-sigma3, sigma3): the upper e1 component picks up -1
    EXPECT_MAT_NEAR(spinor_from_breve(b4(1 / r2, 0, 0, 0), s, SpinorVariant::u), b4(-1 / r2, 0, 0, 0),
                    1e-15);
}

TEST(SpinorFromBreve, InverseRelation)
{
    for (const auto& d : breve_points(50, 9)) {
        const KinematicPoint k(d.m, d.p0, d.n);
        const FourVector s = FourVector::spatial(d.n);
        for (Helicity h : kHelicities) {
            const Bispinor b = breve_u(k, h, h);
            const Bispinor u = spinor_from_breve(b, s, SpinorVariant::u);
            EXPECT_MAT_NEAR(spinor_from_breve(u, s, SpinorVariant::v), -b, 1e-12);
        }
    }
}

TEST(SpinorFromBreve, RejectsTimelikeSpinVector)
{
    EXPECT_THROW(spinor_from_breve(b4(1, 0, 0, 0), FourVector(1, 0, 0, 0), SpinorVariant::u),
                 InvalidArgument);
}

TEST(Kappa, Examples)
{
    EXPECT_EQ(kappa(1.0, 1.0), 0.0);
    EXPECT_NEAR(kappa(1.25, 1.0), 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(kappa(5.0 / 3.0, 1.0), 0.5, 1e-15);
    EXPECT_THROW(kappa(0.5, 1.0), RegionError);
    EXPECT_THROW(kappa(1.0, 0.0), InvalidArgument);
}
