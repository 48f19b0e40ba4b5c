#include "netdecomp/rational.hpp"

#include <cctype>
#include <ostream>

#include "netdecomp/errors.hpp"

namespace netdecomp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// [+-]?digits, returned without a leading '+' (mpz_class rejects it).
bool parse_signed_digits(std::string_view s, std::string& out) {
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) return false;
    out = neg ? "-" + std::string(body) : std::string(body);
    return true;
}

}  // namespace

Rational::Rational(long long n) : v_(mpq_class(mpz_class(std::to_string(n), 10))) {}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw SingularMatrix("rational with zero denominator");
    v_ = Rational(num).v_ / Rational(den).v_;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw SingularMatrix("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    };

    if (text.empty()) return fail();

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::string num, den;
        if (!parse_signed_digits(text.substr(0, slash), num) ||
            !parse_signed_digits(text.substr(slash + 1), den))
            return fail();
        mpz_class d(den, 10);
        if (sgn(d) == 0) return fail();
        mpq_class q(mpz_class(num, 10), d);
        q.canonicalize();
        return Rational(std::move(q));
    }

    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        std::string int_digits;
        if (!parse_signed_digits(int_part, int_digits) || !all_digits(frac_part))
            return fail();
        bool neg = int_digits[0] == '-';
        std::string digits = (neg ? int_digits.substr(1) : int_digits) + std::string(frac_part);
        mpz_class num(digits, 10);
        if (neg) num = -num;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    std::string digits;
    if (!parse_signed_digits(text, digits)) return fail();
    return Rational(mpq_class(mpz_class(digits, 10)));
}

std::string Rational::str() const {
    if (denominator() == 1) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational inverse(const Rational& r) {
    if (r.is_zero()) throw SingularMatrix("inverse of zero rational");
    return Rational(1) / r;
}

}  // namespace netdecomp
