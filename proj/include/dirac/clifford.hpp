#pragma once

// Dirac-representation gamma algebra in signature (+,-,-,-).
//
// Everything here is a pure function of its arguments. The constant matrices
// (Pauli, gamma, gamma5) are built once on first use and returned by const
// reference, so they are safe to share between threads.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dirac/errors.hpp"

namespace dirac {

using Complex = std::complex<double>;
using MatrixC2 = Eigen::Matrix<Complex, 2, 2>;
using MatrixC4 = Eigen::Matrix<Complex, 4, 4>;
using TwoSpinor = Eigen::Matrix<Complex, 2, 1>;
using Bispinor = Eigen::Matrix<Complex, 4, 1>;
using RowBispinor = Eigen::Matrix<Complex, 1, 4>;
using Vector3 = Eigen::Vector3d;

inline constexpr Complex kI{0.0, 1.0};

enum class Sign { plus, minus };

constexpr double sign_value(Sign s) noexcept { return s == Sign::plus ? 1.0 : -1.0; }
constexpr Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Contravariant real four-vector a^mu = (a0, a1, a2, a3).
class FourVector {
public:
    constexpr FourVector() = default;
    constexpr FourVector(double a0, double a1, double a2, double a3) : c_{a0, a1, a2, a3} {}

    /// (0, n) for a spatial 3-vector n.
    static FourVector spatial(const Vector3& n) { return {0.0, n.x(), n.y(), n.z()}; }

    constexpr double operator[](std::size_t mu) const { return c_[mu]; }
    constexpr double& operator[](std::size_t mu) { return c_[mu]; }

    constexpr double time() const { return c_[0]; }
    Vector3 space() const { return {c_[1], c_[2], c_[3]}; }

    /// Minkowski product with metric diag(+1,-1,-1,-1).
    constexpr double dot(const FourVector& b) const
    {
        return c_[0] * b.c_[0] - c_[1] * b.c_[1] - c_[2] * b.c_[2] - c_[3] * b.c_[3];
    }
    constexpr double square() const { return dot(*this); }

    friend constexpr FourVector operator+(const FourVector& a, const FourVector& b)
    {
        return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
    }
    friend constexpr FourVector operator-(const FourVector& a)
    {
        return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]};
    }
    friend constexpr FourVector operator*(double s, const FourVector& a)
    {
        return {s * a.c_[0], s * a.c_[1], s * a.c_[2], s * a.c_[3]};
    }
    friend constexpr bool operator==(const FourVector&, const FourVector&) = default;

private:
    std::array<double, 4> c_{};
};

/// g^{mu mu} of diag(+1,-1,-1,-1).
constexpr double metric(std::size_t mu) noexcept { return mu == 0 ? 1.0 : -1.0; }

namespace detail {

inline void check_lorentz_index(int mu, const char* what)
{
    if (mu < 0 || mu > 3)
        throw InvalidArgument(std::string(what) + ": Lorentz index " + std::to_string(mu) +
                              " outside 0..3");
}

inline void check_spatial_index(int i, const char* what)
{
    if (i < 1 || i > 3)
        throw InvalidArgument(std::string(what) + ": spatial index " + std::to_string(i) +
                              " outside 1..3");
}

inline MatrixC4 blocks(const MatrixC2& a, const MatrixC2& b, const MatrixC2& c, const MatrixC2& d)
{
    MatrixC4 m;
    m << a, b, c, d;
    return m;
}

struct GammaTable {
    std::array<MatrixC2, 4> pauli;  // [0] is the 2x2 identity
    std::array<MatrixC4, 4> gamma;  // upper index
    MatrixC4 gamma5;

    GammaTable()
    {
        pauli[0] = MatrixC2::Identity();
        pauli[1] << 0.0, 1.0, 1.0, 0.0;
        pauli[2] << 0.0, -kI, kI, 0.0;
        pauli[3] << 1.0, 0.0, 0.0, -1.0;
        const MatrixC2 one = MatrixC2::Identity();
        const MatrixC2 zero = MatrixC2::Zero();
        gamma[0] = blocks(one, zero, zero, -one);
        for (int i = 1; i <= 3; ++i)
            gamma[i] = blocks(zero, pauli[i], -pauli[i], zero);
        gamma5 = kI * gamma[0] * gamma[1] * gamma[2] * gamma[3];
    }
};

inline const GammaTable& table()
{
    static const GammaTable t;
    return t;
}

}  // namespace detail

/// Pauli matrix sigma_i, i in 1..3.
inline const MatrixC2& pauli(int i)
{
    detail::check_spatial_index(i, "pauli");
    return detail::table().pauli[i];
}

/// sigma . n for a real 3-vector (no normalization imposed).
inline MatrixC2 sigma_dot(const Vector3& n)
{
    const auto& t = detail::table();
    return n.x() * t.pauli[1] + n.y() * t.pauli[2] + n.z() * t.pauli[3];
}

/// gamma^mu in the Dirac representation: gamma^0 = diag(1,-1),
/// gamma^i = offdiag(sigma_i, -sigma_i).
inline const MatrixC4& gamma(int mu)
{
    detail::check_lorentz_index(mu, "gamma");
    return detail::table().gamma[mu];
}

/// gamma_mu = g_{mu mu} gamma^mu.
inline MatrixC4 gamma_lower(int mu)
{
    detail::check_lorentz_index(mu, "gamma_lower");
    return metric(mu) * detail::table().gamma[mu];
}

/// i gamma^0 gamma^1 gamma^2 gamma^3 = offdiag(1, 1).
inline const MatrixC4& gamma5() { return detail::table().gamma5; }

/// a-slash = a_mu gamma^mu = a^0 gamma^0 - a^i gamma^i.
inline MatrixC4 slash(const FourVector& a)
{
    const auto& g = detail::table().gamma;
    return a[0] * g[0] - a[1] * g[1] - a[2] * g[2] - a[3] * g[3];
}

/// Which index placement the spatial product gamma . s uses.
enum class SpatialGammaIndex {
    upper,  ///< sum_i gamma^i s^i
    lower,  ///< sum_i gamma_i s^i, the negative of `upper`
};

inline MatrixC4 spatial_gamma_dot(const Vector3& s,
                                  SpatialGammaIndex index = SpatialGammaIndex::upper)
{
    const auto& g = detail::table().gamma;
    const MatrixC4 up = s.x() * g[1] + s.y() * g[2] + s.z() * g[3];
    return index == SpatialGammaIndex::upper ? up : MatrixC4(-up);
}

/// sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu], lowered indices.
inline MatrixC4 sigma_munu(int mu, int nu)
{
    detail::check_lorentz_index(mu, "sigma_munu");
    detail::check_lorentz_index(nu, "sigma_munu");
    const MatrixC4 a = gamma_lower(mu);
    const MatrixC4 b = gamma_lower(nu);
    return (0.5 * kI) * (a * b - b * a);
}

/// Three-index Levi-Civita symbol, epsilon_{123} = +1. Indices in 1..3.
constexpr int levi_civita(int i, int j, int k) noexcept
{
    if (i == j || j == k || i == k)
        return 0;
    // even permutations of (1,2,3) are the cyclic ones
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

/// Sign of epsilon_{0123} used by the four-index symbol below.
///
/// With gamma5 = i g^0 g^1 g^2 g^3 the contraction
/// -(i/4!) eps_{mu nu s r} g^mu g^nu g^s g^r reproduces gamma5 only when
/// eps_{0123} = -1 (equivalently eps^{0123} = +1).
inline constexpr int kEpsilonLower0123 = -1;

/// Four-index Levi-Civita symbol with lowered indices; `lower0123` fixes
/// the value of eps_{0123}.
constexpr int levi_civita(int a, int b, int c, int d, int lower0123 = kEpsilonLower0123) noexcept
{
    const int idx[4] = {a, b, c, d};
    for (int x = 0; x < 4; ++x) {
        if (idx[x] < 0 || idx[x] > 3)
            return 0;
        for (int y = x + 1; y < 4; ++y)
            if (idx[x] == idx[y])
                return 0;
    }
    int inversions = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            if (idx[x] > idx[y])
                ++inversions;
    return (inversions % 2 == 0 ? 1 : -1) * lower0123;
}

/// gamma5 from the fully antisymmetrized product,
/// -(i/4!) eps_{mu nu s r} gamma^mu gamma^nu gamma^s gamma^r.
inline MatrixC4 gamma5_from_epsilon(int lower0123 = kEpsilonLower0123)
{
    const auto& g = detail::table().gamma;
    MatrixC4 sum = MatrixC4::Zero();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    const int e = levi_civita(a, b, c, d, lower0123);
                    if (e != 0)
                        sum += double(e) * (g[a] * g[b] * g[c] * g[d]);
                }
    return (-kI / 24.0) * sum;
}

/// Generalized Pauli matrices: sigma^+_l = sum_{ij} eps_{lij} sigma_{ij},
/// sigma^-_l = sum_{ij} eps_{lji} sigma_{ij}, over all ordered pairs, so that
/// sigma^+_3 = 2 sigma_{12}.
inline MatrixC4 generalized_pauli(int lambda, Sign sign)
{
    detail::check_spatial_index(lambda, "generalized_pauli");
    MatrixC4 sum = MatrixC4::Zero();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const int e = sign == Sign::plus ? levi_civita(lambda, i, j) : levi_civita(lambda, j, i);
            if (e != 0)
                sum += double(e) * sigma_munu(i, j);
        }
    return sum;
}

/// Trace of the ordered product ms[0] ms[1] ... ms[n-1].
inline Complex trace(std::span<const MatrixC4> ms)
{
    if (ms.empty())
        throw InvalidArgument("trace: empty matrix list");
    MatrixC4 prod = ms.front();
    for (std::size_t k = 1; k < ms.size(); ++k)
        prod = prod * ms[k];
    return prod.trace();
}

inline Complex trace(std::initializer_list<MatrixC4> ms)
{
    return trace(std::span<const MatrixC4>(ms.begin(), ms.size()));
}

/// Largest elementwise |a - b|. Shapes must agree.
template <typename A, typename B>
double max_abs_diff(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidArgument("max_abs_diff: shape mismatch");
    if (a.size() == 0)
        return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

template <typename A, typename B>
bool approx_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b, double abs_tol)
{
    return max_abs_diff(a, b) <= abs_tol;
}

}  // namespace dirac
