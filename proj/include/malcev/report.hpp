#pragma once

/// \file report.hpp
/// Verdicts of identity and axiom checks, with first-failure witnesses.

#include "malcev/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace malcev {

/// The lexicographically first failing tuple and its residual. A vector
/// residual is stored as a one-column matrix.
struct Witness {
    std::vector<std::size_t> indices;
    std::string arguments;
    Matrix residual;
};

struct CheckResult {
    std::string name;
    bool holds = true;
    std::optional<Witness> witness;
    std::string note;
};

using IdentityReport = CheckResult;

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool holds() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return true;
    }

    const CheckResult* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

inline CheckResult passed(std::string name, std::string note = {})
{
    return CheckResult{std::move(name), true, std::nullopt, std::move(note)};
}

inline CheckResult failed(std::string name, Witness w, std::string note = {})
{
    return CheckResult{std::move(name), false, std::move(w), std::move(note)};
}

/// Renders Σ v_i name_i, e.g. "2*e1 - e4" or "(a + b)*x2".
inline std::string render_combination(const Vector& v, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Scalar& c = v[i];
        if (c.is_zero())
            continue;
        const std::string& name = i < names.size() ? names[i] : "b" + std::to_string(i + 1);
        std::string term;
        bool negative = false;
        if (c.is_rational()) {
            Rational r = c.rational();
            negative = r.sign() < 0;
            Rational a = negative ? -r : r;
            term = a.is_one() ? name : a.render() + "*" + name;
        } else if (c.term_count() == 1) {
            std::string s = c.render();
            negative = s[0] == '-';
            term = (negative ? s.substr(1) : s) + "*" + name;
        } else {
            term = "(" + c.render() + ")*" + name;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string render_matrix(const Matrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ", ";
            out += m(i, j).render();
        }
        out += "]";
    }
    return out + "]";
}

inline std::string render_tuple(const std::vector<std::size_t>& idx, const std::vector<std::string>& names)
{
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i)
            out += ", ";
        out += idx[i] < names.size() ? names[idx[i]] : std::to_string(idx[i]);
    }
    return out + ")";
}

} // namespace malcev
