#pragma once

// Deterministic sample generation for the identity registry.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// standard; reals are formed from the top 53 bits directly rather than through
// <random> distributions, whose algorithms are implementation-defined.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

#include "dirac/clifford.hpp"
#include "dirac/kinematics.hpp"

namespace dirac {

/// FNV-1a, 64-bit.
constexpr std::uint64_t fnv1a(std::string_view s) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// splitmix64 finalizer; spreads (seed, name) combinations over the state space.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::string_view stream) : engine_(mix64(seed ^ mix64(fnv1a(stream)))) {}

    /// Uniform on [0, 1).
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform on the unit sphere (Archimedes: z uniform, azimuth uniform).
    Vector3 direction()
    {
        const double z = uniform(-1.0, 1.0);
        const double phi = 2.0 * std::numbers::pi * uniform();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return Vector3(r * std::cos(phi), r * std::sin(phi), z).normalized();
    }

    /// Unit vector orthogonal to n.
    Vector3 orthogonal_direction(const Vector3& n)
    {
        for (;;) {
            const Vector3 v = direction();
            const Vector3 w = v - v.dot(n) * n;
            if (w.norm() > 1e-3)
                return w.normalized();
        }
    }

    Complex complex_in_box(double half_width)
    {
        const double re = uniform(-half_width, half_width);
        const double im = uniform(-half_width, half_width);
        return {re, im};
    }

private:
    std::mt19937_64 engine_;
};

/// Which region of parameter space a check draws from.
enum class Domain {
    fixed,      ///< a single rest point (p0 = m, n = z)
    direction,  ///< p0 = m, n uniform on the sphere
    on_shell,   ///< p0/m log-uniform on [1, 10], n uniform
    breve,      ///< p0 uniform on [-m, m], n uniform
    spinor,     ///< random complex bispinor xi and complex scale alpha
    matrices,   ///< three random complex 4x4 matrices with entries in a box
};

inline constexpr std::string_view domain_name(Domain d) noexcept
{
    switch (d) {
    case Domain::fixed: return "fixed";
    case Domain::direction: return "direction";
    case Domain::on_shell: return "on-shell";
    case Domain::breve: return "breve";
    case Domain::spinor: return "spinor";
    case Domain::matrices: return "matrices";
    }
    return "unknown";
}

struct SamplePoint {
    Domain domain = Domain::fixed;
    double m = 1.0;
    double p0 = 1.0;
    Vector3 nhat = Vector3::UnitZ();
    Vector3 transverse = Vector3::UnitX();  ///< unit vector orthogonal to nhat
    Bispinor xi = Bispinor::Zero();
    Complex alpha{1.0, 0.0};
    std::array<MatrixC4, 3> mats{MatrixC4::Zero(), MatrixC4::Zero(), MatrixC4::Zero()};

    KinematicPoint kinematics() const { return {m, p0, nhat}; }
};

inline SamplePoint draw_sample(Domain domain, SampleRng& rng, double m)
{
    SamplePoint s;
    s.domain = domain;
    s.m = m;
    switch (domain) {
    case Domain::fixed:
        s.p0 = m;
        break;
    case Domain::direction:
        s.p0 = m;
        s.nhat = rng.direction();
        s.transverse = rng.orthogonal_direction(s.nhat);
        break;
    case Domain::on_shell:
        s.p0 = m * std::pow(10.0, rng.uniform());
        s.nhat = rng.direction();
        s.transverse = rng.orthogonal_direction(s.nhat);
        break;
    case Domain::breve:
        s.p0 = m * rng.uniform(-1.0, 1.0);
        s.nhat = rng.direction();
        s.transverse = rng.orthogonal_direction(s.nhat);
        break;
    case Domain::spinor:
        for (int i = 0; i < 4; ++i)
            s.xi(i) = rng.complex_in_box(1.0);
        s.alpha = rng.complex_in_box(2.0);
        break;
    case Domain::matrices:
        for (auto& mat : s.mats)
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    mat(r, c) = rng.complex_in_box(0.5);
        break;
    }
    return s;
}

}  // namespace dirac
