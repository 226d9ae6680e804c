#pragma once

// Text and JSON renderings of a VerificationReport.
//
// JSON numbers are printed with 17 significant digits so every double
// round-trips; key order is fixed, so equal reports serialize to equal bytes.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>

#include "dirac/verify.hpp"

namespace dirac {

inline std::string_view to_string(SpatialGammaIndex i) noexcept
{
    return i == SpatialGammaIndex::upper ? "upper" : "lower";
}

namespace detail {

inline std::string format_double(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

class JsonWriter {
public:
    std::string str() const { return out_.str(); }

    void raw(std::string_view s) { out_ << s; }

    void string(std::string_view s)
    {
        out_ << '"';
        for (unsigned char c : s) {
            switch (c) {
            case '"': out_ << "\\\""; break;
            case '\\': out_ << "\\\\"; break;
            case '\n': out_ << "\\n"; break;
            case '\t': out_ << "\\t"; break;
            case '\r': out_ << "\\r"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out_ << buf;
                } else {
                    out_ << c;
                }
            }
        }
        out_ << '"';
    }

    void number(double v)
    {
        if (!std::isfinite(v))
            out_ << "null";
        else
            out_ << format_double(v, 17);
    }

    template <typename Int>
    void integer(Int v)
    {
        out_ << v;
    }

    void newline(int depth)
    {
        out_ << '\n';
        for (int i = 0; i < depth; ++i)
            out_ << "  ";
    }

    void key(std::string_view k, int depth, bool first)
    {
        if (!first)
            out_ << ',';
        newline(depth);
        string(k);
        out_ << ": ";
    }

private:
    std::ostringstream out_;
};

inline void write_point(JsonWriter& w, const SamplePoint& p, int depth)
{
    w.raw("{");
    w.key("domain", depth + 1, true);
    w.string(domain_name(p.domain));
    if (p.domain == Domain::spinor) {
        w.key("xi", depth + 1, false);
        w.raw("[");
        for (int i = 0; i < 4; ++i) {
            if (i)
                w.raw(", ");
            w.raw("[");
            w.number(p.xi(i).real());
            w.raw(", ");
            w.number(p.xi(i).imag());
            w.raw("]");
        }
        w.raw("]");
        w.key("alpha", depth + 1, false);
        w.raw("[");
        w.number(p.alpha.real());
        w.raw(", ");
        w.number(p.alpha.imag());
        w.raw("]");
    } else if (p.domain == Domain::matrices) {
        w.key("matrices", depth + 1, false);
        w.raw("[");
        for (int k = 0; k < 3; ++k) {
            if (k)
                w.raw(", ");
            w.raw("[");
            for (int i = 0; i < 16; ++i) {
                if (i)
                    w.raw(", ");
                w.raw("[");
                w.number(p.mats[k](i / 4, i % 4).real());
                w.raw(", ");
                w.number(p.mats[k](i / 4, i % 4).imag());
                w.raw("]");
            }
            w.raw("]");
        }
        w.raw("]");
    } else {
        w.key("m", depth + 1, false);
        w.number(p.m);
        w.key("p0", depth + 1, false);
        w.number(p.p0);
        w.key("nhat", depth + 1, false);
        w.raw("[");
        for (int i = 0; i < 3; ++i) {
            if (i)
                w.raw(", ");
            w.number(p.nhat(i));
        }
        w.raw("]");
        if (p.domain != Domain::fixed) {
            w.key("transverse", depth + 1, false);
            w.raw("[");
            for (int i = 0; i < 3; ++i) {
                if (i)
                    w.raw(", ");
                w.number(p.transverse(i));
            }
            w.raw("]");
        }
    }
    w.newline(depth);
    w.raw("}");
}

}  // namespace detail

inline std::string to_json(const VerificationReport& rep)
{
    detail::JsonWriter w;
    w.raw("{");
    w.key("version", 1, true);
    w.string(rep.version);
    w.key("seed", 1, false);
    w.integer(rep.seed);
    w.key("samples", 1, false);
    w.integer(rep.samples);
    w.key("tolerance", 1, false);
    w.number(rep.tolerance);

    w.key("conventions", 1, false);
    w.raw("{");
    w.key("metric", 2, true);
    w.string("diag(+1,-1,-1,-1)");
    w.key("representation", 2, false);
    w.string("Dirac (standard): gamma^0 = diag(1,-1), gamma^i = offdiag(sigma_i, -sigma_i), "
             "gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3 = offdiag(1,1)");
    w.key("branch_rule", 2, false);
    w.string("principal: sqrt(x) = i sqrt(-x) for x < 0; |p| = 2m sqrt((p0+m)/2m) sqrt((p0-m)/2m)");
    w.key("spatial_gamma_index", 2, false);
    w.string(rep.conventions.spatial_index == SpatialGammaIndex::upper
                 ? "upper: gamma.s = sum_i gamma^i s^i"
                 : "lower: gamma.s = sum_i gamma_i s^i");
    w.key("epsilon", 2, false);
    w.string("eps^{0123} = +1 (eps_{0123} = -1); eps_{123} = +1");
    w.key("generalized_pauli_sum", 2, false);
    w.string("all ordered pairs (i,j): sigma^+_3 = 2 sigma_{12}");
    w.key("plane_wave_phase", 2, false);
    w.string("1 (objects evaluated at x = 0)");
    w.key("mass", 2, false);
    w.number(rep.conventions.mass);
    w.key("notes", 2, false);
    w.raw("[");
    for (std::size_t i = 0; i < rep.notes.size(); ++i) {
        if (i)
            w.raw(",");
        w.newline(3);
        w.string(rep.notes[i]);
    }
    w.newline(2);
    w.raw("]");
    w.newline(1);
    w.raw("}");

    w.key("checks", 1, false);
    w.raw("[");
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const auto& c = rep.checks[i];
        if (i)
            w.raw(",");
        w.newline(2);
        w.raw("{");
        w.key("name", 3, true);
        w.string(c.name);
        w.key("paper_ref", 3, false);
        w.string(c.reference);
        w.key("samples", 3, false);
        w.integer(c.samples);
        w.key("tolerance", 3, false);
        w.number(c.tolerance);
        w.key("max_residual", 3, false);
        w.number(c.max_residual);
        w.key("worst_point", 3, false);
        detail::write_point(w, c.worst_point, 3);
        w.key("expected_status", 3, false);
        w.string(to_string(c.expected));
        w.key("status", 3, false);
        w.string(to_string(c.status));
        w.newline(2);
        w.raw("}");
    }
    w.newline(1);
    w.raw("]");
    w.newline(0);
    w.raw("}\n");
    return w.str();
}

inline std::string to_text(const VerificationReport& rep)
{
    std::ostringstream os;
    os << "dirac-check " << rep.version << "  seed=" << rep.seed << "  samples=" << rep.samples
       << "  tolerance=" << detail::format_double(rep.tolerance, 3) << "\n";
    os << "metric diag(+,-,-,-), Dirac representation, principal branch, gamma.s index "
       << to_string(rep.conventions.spatial_index) << ", eps^{0123}=+1, m="
       << detail::format_double(rep.conventions.mass, 6) << "\n\n";
    int pass = 0, fail = 0, info = 0;
    for (const auto& c : rep.checks) {
        char line[256];
        std::snprintf(line, sizeof line, "  %-5s %-34s residual %-12.3e tol %-9.1e (%s)\n",
                      std::string(to_string(c.status)).c_str(), c.name.c_str(), c.max_residual,
                      c.tolerance, std::string(to_string(c.expected)).c_str());
        os << line;
        pass += c.status == CheckStatus::pass;
        fail += c.status == CheckStatus::fail;
        info += c.status == CheckStatus::info;
    }
    os << "\n" << pass << " pass, " << fail << " fail, " << info << " info\n";
    for (const auto& n : rep.notes)
        os << "note: " << n << "\n";
    return os.str();
}

}  // namespace dirac
