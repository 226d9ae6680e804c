// dirac-check: run the identity registry or print individual objects.
//
// Exit codes: 0 success, 1 an identity expected to hold failed,
// 2 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dirac/dirac.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt12(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
    return buf;
}

template <typename M>
void print_matrix(std::ostream& os, const std::string& label, const Eigen::MatrixBase<M>& m)
{
    auto part = [&](const char* which, auto&& get) {
        os << label << " " << which << ":\n";
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            os << "  (";
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                os << (c ? ", " : "") << fmt12(get(m(r, c)));
            os << ")\n";
        }
    };
    part("re", [](dirac::Complex z) { return z.real(); });
    part("im", [](dirac::Complex z) { return z.imag(); });
}

template <typename V>
void print_vector(std::ostream& os, const std::string& label, const Eigen::MatrixBase<V>& v)
{
    auto line = [&](const char* which, auto&& get) {
        os << label << " " << which << ": (";
        for (Eigen::Index i = 0; i < v.size(); ++i)
            os << (i ? ", " : "") << fmt12(get(v(i)));
        os << ")\n";
    };
    line("re", [](dirac::Complex z) { return z.real(); });
    line("im", [](dirac::Complex z) { return z.imag(); });
}

dirac::Helicity parse_helicity(const std::string& s)
{
    if (s == "+" || s == "up" || s == "+1/2")
        return dirac::Helicity::up;
    if (s == "-" || s == "down" || s == "-1/2")
        return dirac::Helicity::down;
    throw UsageError("helicity must be + or -, got '" + s + "'");
}

dirac::Sign parse_sign(const std::string& s)
{
    if (s == "+")
        return dirac::Sign::plus;
    if (s == "-")
        return dirac::Sign::minus;
    throw UsageError("sign must be + or -, got '" + s + "'");
}

struct Kinematics {
    std::optional<double> p0;
    std::optional<double> m;
    double nx = 0.0, ny = 0.0, nz = 1.0;

    void add_to(CLI::App* app, bool required)
    {
        auto* o1 = app->add_option("--p0", p0, "energy parameter p0");
        auto* o2 = app->add_option("--m", m, "mass m > 0");
        if (required) {
            o1->required();
            o2->required();
        }
        app->add_option("--nx", nx, "helicity axis x component")->capture_default_str();
        app->add_option("--ny", ny, "helicity axis y component")->capture_default_str();
        app->add_option("--nz", nz, "helicity axis z component")->capture_default_str();
    }

    dirac::KinematicPoint point(const std::string& who) const
    {
        if (!p0 || !m)
            throw UsageError(who + " requires --p0 and --m");
        return {*m, *p0, dirac::Vector3(nx, ny, nz)};
    }
};

struct VerifyArgs {
    std::uint64_t seed = 42;
    int samples = 100;
    std::optional<double> tolerance;
    std::string format = "text";
    std::string output;
    std::string gamma_index = "upper";
    double mass = 1.0;
    bool serial = false;
};

int cmd_verify(const VerifyArgs& a)
{
    dirac::RunOptions opt;
    opt.seed = a.seed;
    opt.samples = a.samples;
    opt.tolerance_override = a.tolerance;
    opt.conventions.mass = a.mass;
    opt.conventions.spatial_index =
        a.gamma_index == "lower" ? dirac::SpatialGammaIndex::lower : dirac::SpatialGammaIndex::upper;
    opt.parallel = !a.serial;

    const dirac::VerificationReport rep = dirac::run_all(opt);
    const std::string body = a.format == "json" ? dirac::to_json(rep) : dirac::to_text(rep);

    if (a.output.empty() || a.output == "-") {
        std::cout << body;
        std::cout.flush();
    } else {
        std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
        if (!out)
            throw UsageError("cannot open output file '" + a.output + "'");
        out << body;
        out.close();
        if (!out)
            throw UsageError("failed writing output file '" + a.output + "'");
    }
    return rep.any_failed() ? kExitIdentityFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dirac-algebra spinor/projector toolkit and identity verifier"};
    app.require_subcommand(1);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run every registered identity check");
    verify->add_option("--seed", va.seed, "generator seed")->capture_default_str();
    verify->add_option("--samples", va.samples, "samples per check (>= 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--tolerance", va.tolerance,
                       "override every check's absolute tolerance (> 0); default per check, 1e-10 otherwise")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", va.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--output,-o", va.output, "write the report here instead of stdout");
    verify->add_option("--gamma-index", va.gamma_index,
                       "index placement in gamma.s for pi-projectors and spinor maps")
        ->check(CLI::IsMember({"upper", "lower"}))
        ->capture_default_str();
    verify->add_option("--mass", va.mass, "mass used by every sampler")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_flag("--serial", va.serial, "evaluate checks on one thread");

    auto* show = app.add_subcommand("show", "print one object");
    show->require_subcommand(1);

    // show basis
    Kinematics kb;
    int tau = 0;
    std::string basis_set = "u";
    std::string basis_sign = "+";
    auto* basis = show->add_subcommand("basis", "tetrad basis bispinor u(p, s^tau)");
    basis->add_option("--tau", tau, "tetrad index 1..4")->required();
    kb.add_to(basis, true);
    basis->add_option("--set", basis_set, "u (symmetric), u-plus (antisymmetric) or rest (p0 = 0 basis)")
        ->check(CLI::IsMember({"u", "u-plus", "rest"}))
        ->capture_default_str();
    basis->add_option("--sign", basis_sign, "overall +-i of u-plus")->capture_default_str();

    // show breve
    Kinematics kv;
    std::string lp = "+", lm = "+";
    auto* breve = show->add_subcommand("breve", "complex bispinor on |p0| <= m and its conjugate row");
    kv.add_to(breve, true);
    breve->add_option("--lp", lp, "lambda+ (+ or -)")->capture_default_str();
    breve->add_option("--lm", lm, "lambda- (+ or -)")->capture_default_str();

    // show projector
    Kinematics kp;
    std::string proj_kind;
    double sx = 0.0, sy = 0.0, sz = 0.0;
    std::string proj_sign = "+";
    auto* projector = show->add_subcommand("projector", "spin, energy or pi projector");
    projector->add_option("--kind", proj_kind, "spin | energy | pi | pi-neg")
        ->required()
        ->check(CLI::IsMember({"spin", "energy", "pi", "pi-neg"}));
    projector->add_option("--sx", sx, "spin direction x")->capture_default_str();
    projector->add_option("--sy", sy, "spin direction y")->capture_default_str();
    projector->add_option("--sz", sz, "spin direction z")->capture_default_str();
    projector->add_option("--sign", proj_sign, "energy projector sign (+ or -)")->capture_default_str();
    kp.add_to(projector, false);

    // show polsum
    Kinematics ks;
    std::string sum_kind;
    auto* psum = show->add_subcommand("polsum", "polarization sum: explicit lhs, closed-form rhs");
    psum->add_option("--kind", sum_kind, "spinor | antispinor | breve-plus | breve-minus | completeness")
        ->required()
        ->check(CLI::IsMember({"spinor", "antispinor", "breve-plus", "breve-minus", "completeness"}));
    ks.add_to(psum, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        const CLI::App* sub = nullptr;
        for (const auto* s : {basis, breve, projector, psum})
            if (s->parsed())
                sub = s;
        if (sub == basis)
            std::cerr << "required: --tau --p0 --m\n";
        else if (sub == breve)
            std::cerr << "required: --p0 --m (optional --lp --lm --nx --ny --nz)\n";
        else if (sub == projector)
            std::cerr << "required: --kind; spin needs --sx --sy --sz, energy/pi need --p0 --m\n";
        else if (sub == psum)
            std::cerr << "required: --kind --p0 --m\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(va);

        std::ostream& os = std::cout;
        if (basis->parsed()) {
            const dirac::TetradIndex t(tau);
            if (basis_set == "rest") {
                print_vector(os, "rest_basis", dirac::rest_basis(t));
            } else {
                const auto k = kb.point("show basis");
                if (basis_set == "u")
                    print_vector(os, "u", dirac::bispinor_u(k, t));
                else
                    print_vector(os, "u_plus", dirac::bispinor_u_plus(k, t, parse_sign(basis_sign)));
            }
        } else if (breve->parsed()) {
            const auto k = kv.point("show breve");
            const auto hp = parse_helicity(lp), hm = parse_helicity(lm);
            const auto u = dirac::breve_u(k, hp, hm);
            const auto ubar = dirac::breve_u_bar(k, hp, hm);
            print_vector(os, "breve_u", u);
            print_vector(os, "breve_u_bar", ubar);
            const dirac::Complex norm = (ubar * u)(0, 0);
            os << "norm re: " << fmt12(norm.real()) << "\nnorm im: " << fmt12(norm.imag()) << "\n";
        } else if (projector->parsed()) {
            const dirac::Vector3 s(sx, sy, sz);
            auto spin = [&] {
                if (!dirac::is_unit(s, dirac::kSpinVectorTolerance))
                    throw UsageError("spin direction --sx --sy --sz must be a unit vector");
                return dirac::SpinVector(s);
            };
            dirac::MatrixC4 m;
            if (proj_kind == "spin") {
                m = dirac::spin_projector(spin()).matrix;
            } else if (proj_kind == "energy") {
                m = dirac::energy_projector(kp.point("energy projector"), parse_sign(proj_sign)).matrix;
            } else {
                const auto v = proj_kind == "pi" ? dirac::PiVariant::lambda : dirac::PiVariant::neg_lambda;
                m = dirac::pi_projector(kp.point("pi projector"), spin(), v).matrix;
            }
            print_matrix(os, proj_kind, m);
        } else if (psum->parsed()) {
            const auto k = ks.point("show polsum");
            dirac::PolsumKind kind = dirac::PolsumKind::spinor;
            if (sum_kind == "antispinor")
                kind = dirac::PolsumKind::antispinor;
            else if (sum_kind == "breve-plus")
                kind = dirac::PolsumKind::breve_plus;
            else if (sum_kind == "breve-minus")
                kind = dirac::PolsumKind::breve_minus;
            else if (sum_kind == "completeness")
                kind = dirac::PolsumKind::completeness;
            const auto ps = dirac::polsum(kind, k);
            print_matrix(os, "lhs", ps.lhs);
            print_matrix(os, "rhs", ps.rhs);
            os << "max residual: " << fmt12(dirac::max_abs_diff(ps.lhs, ps.rhs)) << "\n";
        }
        return kExitOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const dirac::ConfigurationError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "region error: " << e.what() << "\n";
        return kExitUsage;
    }
}
