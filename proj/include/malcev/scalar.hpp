#pragma once

/// \file scalar.hpp
/// Exact scalars: rationals and multivariate Laurent polynomials over Q.
///
/// Every Scalar is kept in canonical normal form, so a residual is
/// identically zero exactly when `is_zero()` says so. A Laurent polynomial
/// whose only term is constant is demoted to a Rational; the two tags never
/// describe the same value.

#include "malcev/error.hpp"

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace malcev {

class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long n, long d)
    {
        if (d == 0)
            throw division_by_zero("rational with zero denominator");
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses an optionally signed `p` or `p/q` with decimal integers.
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        mpq_class q;
        auto slash = s.find('/');
        auto valid_int = [](std::string_view t, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+'))
                ++i;
            if (i == t.size())
                return false;
            for (; i < t.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(t[i])))
                    return false;
            return true;
        };
        if (slash == std::string::npos) {
            if (!valid_int(s, true))
                throw input_error("invalid rational '" + s + "'");
            if (s[0] == '+')
                s.erase(0, 1);
            q = mpq_class(mpz_class(s, 10));
        } else {
            std::string num = s.substr(0, slash);
            std::string den = s.substr(slash + 1);
            if (!valid_int(num, true) || !valid_int(den, false))
                throw input_error("invalid rational '" + s + "'");
            if (num[0] == '+')
                num.erase(0, 1);
            mpz_class d(den, 10);
            if (d == 0)
                throw division_by_zero("rational with zero denominator: '" + s + "'");
            q = mpq_class(mpz_class(num, 10), d);
        }
        return Rational(std::move(q));
    }

    const mpq_class& value() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero())
            throw division_by_zero("division of rational by zero");
        return Rational(mpq_class(a.value_ / b.value_));
    }
    Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
    Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
    Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }

    Rational inverse() const
    {
        if (is_zero())
            throw division_by_zero("inverse of zero");
        return Rational(mpq_class(1 / value_));
    }

    Rational pow(int e) const
    {
        if (e < 0)
            return inverse().pow(-e);
        mpq_class result = 1;
        mpq_class base = value_;
        for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
            if (k & 1U)
                result *= base;
            base *= base;
        }
        return Rational(std::move(result));
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string render() const { return value_.get_str(10); }

private:
    mpq_class value_;
};

/// Ordered list of parameter names. Copies share storage.
class Ring {
public:
    Ring() : names_(empty()) {}
    explicit Ring(std::vector<std::string> names)
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& n = names[i];
            bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
            for (char ch : n)
                ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
            if (!ok)
                throw input_error("invalid parameter name '" + n + "'");
            for (std::size_t j = 0; j < i; ++j)
                if (names[j] == n)
                    throw input_error("duplicate parameter name '" + n + "'");
        }
        names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
    }

    std::size_t size() const { return names_->size(); }
    bool empty_ring() const { return names_->empty(); }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name)
                return i;
        return std::nullopt;
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.names_ == b.names_ || *a.names_ == *b.names_; }

private:
    static std::shared_ptr<const std::vector<std::string>> empty()
    {
        static const auto e = std::make_shared<const std::vector<std::string>>();
        return e;
    }
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<int>;
using Assignment = std::map<std::string, Rational, std::less<>>;

/// Laurent polynomial with rational coefficients. Terms are kept in
/// descending lexicographic order of exponent vectors; no zero coefficients.
class LaurentPoly {
public:
    using Terms = std::map<Exponents, Rational, std::greater<>>;

    explicit LaurentPoly(Ring ring = {}) : ring_(std::move(ring)) {}

    static LaurentPoly constant(Ring ring, const Rational& c)
    {
        LaurentPoly p(std::move(ring));
        p.add_term(Exponents(p.ring_.size(), 0), c);
        return p;
    }

    static LaurentPoly variable(Ring ring, std::string_view name, int exponent = 1)
    {
        auto idx = ring.index_of(name);
        if (!idx)
            throw input_error("unknown parameter '" + std::string(name) + "'");
        LaurentPoly p(std::move(ring));
        Exponents e(p.ring_.size(), 0);
        e[*idx] = exponent;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    void add_term(Exponents e, const Rational& c)
    {
        if (e.size() != ring_.size())
            throw input_error("exponent vector length does not match ring");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        if (terms_.empty())
            return true;
        if (terms_.size() != 1)
            return false;
        for (int x : terms_.begin()->first)
            if (x != 0)
                return false;
        return true;
    }

    Rational constant_value() const
    {
        if (terms_.empty())
            return Rational(0);
        return terms_.begin()->second;
    }

    /// Units of Q[x, x^-1] are exactly the nonzero single-term elements.
    bool is_unit() const { return terms_.size() == 1; }

    LaurentPoly operator-() const
    {
        LaurentPoly r(ring_);
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
    {
        check_same_ring(a, b);
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_)
            r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        check_same_ring(a, b);
        LaurentPoly r(a.ring_);
        Exponents e(a.ring_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentPoly inverse() const
    {
        if (is_zero())
            throw division_by_zero("inverse of zero");
        if (!is_unit())
            throw not_invertible("'" + render() +
                                 "' is not a unit of the Laurent polynomial ring; instantiate the parameters first");
        const auto& [e, c] = *terms_.begin();
        LaurentPoly r(ring_);
        Exponents ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            ne[i] = -e[i];
        r.add_term(std::move(ne), c.inverse());
        return r;
    }

    Rational eval(const Assignment& values) const
    {
        Rational sum(0);
        std::vector<std::optional<Rational>> val(ring_.size());
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!val[i]) {
                    auto it = values.find(ring_.names()[i]);
                    if (it == values.end())
                        throw input_error("no value given for parameter '" + ring_.names()[i] + "'");
                    val[i] = it->second;
                }
                if (e[i] < 0 && val[i]->is_zero())
                    throw division_by_zero("parameter '" + ring_.names()[i] +
                                           "' is zero but occurs with a negative exponent");
                term *= val[i]->pow(e[i]);
            }
            sum += term;
        }
        return sum;
    }

    /// Substitutes the assigned parameters and keeps the others symbolic.
    LaurentPoly substitute(const Assignment& values) const
    {
        LaurentPoly r(ring_);
        for (const auto& [e, c] : terms_) {
            Exponents ne = e;
            Rational coeff = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                auto it = values.find(ring_.names()[i]);
                if (e[i] == 0 || it == values.end())
                    continue;
                if (e[i] < 0 && it->second.is_zero())
                    throw division_by_zero("parameter '" + ring_.names()[i] +
                                           "' is zero but occurs with a negative exponent");
                coeff *= it->second.pow(e[i]);
                ne[i] = 0;
            }
            r.add_term(std::move(ne), coeff);
        }
        return r;
    }

    std::string render() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += '*';
                mono += ring_.names()[i];
                if (e[i] != 1)
                    mono += '^' + std::to_string(e[i]);
            }
            std::string term;
            if (mono.empty())
                term = c.render();
            else if (c.is_one())
                term = mono;
            else if ((-c).is_one())
                term = "-" + mono;
            else
                term = c.render() + "*" + mono;
            if (first)
                out = term;
            else if (term[0] == '-')
                out += " - " + term.substr(1);
            else
                out += " + " + term;
            first = false;
        }
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    static void check_same_ring(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (!(a.ring_ == b.ring_))
            throw input_error("ring mismatch: scalars from different parameter rings combined");
    }

    Ring ring_;
    Terms terms_;
};

/// Exact field or ring element: a Rational, or a Laurent polynomial that is
/// not constant.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    Scalar(long n) : value_(Rational(n)) {} // NOLINT(google-explicit-constructor)
    Scalar(Rational r) : value_(std::move(r)) {} // NOLINT(google-explicit-constructor)
    Scalar(LaurentPoly p) // NOLINT(google-explicit-constructor)
    {
        if (p.is_constant())
            value_ = p.constant_value();
        else
            value_ = std::move(p);
    }

    static Scalar parse(std::string_view text, const Ring& ring = {});

    bool is_rational() const { return std::holds_alternative<Rational>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }
    const LaurentPoly& poly() const { return std::get<LaurentPoly>(value_); }

    /// Ring of the polynomial, or the empty ring for a Rational.
    Ring ring() const { return is_rational() ? Ring{} : poly().ring(); }

    bool is_zero() const { return is_rational() && rational().is_zero(); }
    bool is_one() const { return is_rational() && rational().is_one(); }

    /// True when the value has an inverse in its ring (nonzero rational or single-term polynomial).
    bool is_unit() const { return is_rational() ? !rational().is_zero() : poly().is_unit(); }

    /// Number of terms in the canonical form (0 for zero).
    std::size_t term_count() const
    {
        if (is_rational())
            return rational().is_zero() ? 0 : 1;
        return poly().terms().size();
    }

    Scalar operator-() const
    {
        if (is_rational())
            return Scalar(-rational());
        return Scalar(-poly());
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        if (a.is_rational() && b.is_rational())
            return Scalar(a.rational() + b.rational());
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        return Scalar(lift(a, b) + lift(b, a));
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        if (a.is_rational() && b.is_rational())
            return Scalar(a.rational() * b.rational());
        if (a.is_zero() || b.is_zero())
            return Scalar();
        return Scalar(lift(a, b) * lift(b, a));
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const
    {
        if (is_rational())
            return Scalar(rational().inverse());
        return Scalar(poly().inverse());
    }

    Rational eval(const Assignment& values) const
    {
        return is_rational() ? rational() : poly().eval(values);
    }

    Scalar substitute(const Assignment& values) const
    {
        return is_rational() ? *this : Scalar(poly().substitute(values));
    }

    std::string render() const { return is_rational() ? rational().render() : poly().render(); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    static LaurentPoly lift(const Scalar& x, const Scalar& other)
    {
        if (!x.is_rational())
            return x.poly();
        return LaurentPoly::constant(other.poly().ring(), x.rational());
    }

    std::variant<Rational, LaurentPoly> value_;
};

namespace detail {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    LaurentPoly parse()
    {
        LaurentPoly result(ring_);
        skip_ws();
        if (at_end())
            fail("empty expression");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (!first) {
                if (peek() == '+')
                    ++pos_;
                else if (peek() == '-') {
                    sign = -1;
                    ++pos_;
                } else
                    fail("expected '+' or '-'");
                skip_ws();
            }
            // a leading sign (or a doubled sign after an operator) belongs to the term
            while (!at_end() && (peek() == '+' || peek() == '-')) {
                if (peek() == '-')
                    sign = -sign;
                ++pos_;
                skip_ws();
            }
            parse_term(result, sign);
            first = false;
            skip_ws();
        }
        return result;
    }

private:
    void parse_term(LaurentPoly& out, int sign)
    {
        Rational coeff(sign);
        Exponents exps(ring_.size(), 0);
        bool have_factor = false;
        if (at_end())
            fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_rational();
            have_factor = true;
            skip_ws();
            if (at_end() || peek() != '*')
                return out.add_term(std::move(exps), coeff);
            ++pos_;
            skip_ws();
        }
        for (;;) {
            if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
                fail(have_factor ? "expected a parameter name after '*'" : "expected a number or parameter name");
            std::size_t start = pos_;
            std::string name = parse_ident();
            auto idx = ring_.index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown parameter '" + name + "'");
            }
            int e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_int();
            }
            exps[*idx] += e;
            have_factor = true;
            skip_ws();
            if (at_end() || peek() != '*')
                break;
            ++pos_;
            skip_ws();
        }
        out.add_term(std::move(exps), coeff);
    }

    Rational parse_rational()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        std::string num(text_.substr(start, pos_ - start));
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t ds = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (ds == pos_)
                fail("expected denominator after '/'");
            std::string den(text_.substr(ds, pos_ - ds));
            if (mpz_class(den, 10) == 0) {
                pos_ = ds;
                fail("zero denominator");
            }
            return Rational::parse(num + "/" + den);
        }
        return Rational::parse(num);
    }

    int parse_int()
    {
        int sign = 1;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            if (peek() == '-')
                sign = -1;
            ++pos_;
        }
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected integer exponent");
        if (pos_ - start > 6)
            fail("exponent out of range");
        return sign * std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::string parse_ident()
    {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::ostringstream os;
        os << "syntax error at position " << pos_ << " in '" << text_ << "': " << what;
        throw input_error(os.str());
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Grammar: `term (('+'|'-') term)*`, term = [p | p/q] ['*'] name[^int] ('*' name[^int])*.
inline Scalar Scalar::parse(std::string_view text, const Ring& ring)
{
    return Scalar(detail::ScalarParser(text, ring).parse());
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.render(); }
inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.render(); }

} // namespace malcev
