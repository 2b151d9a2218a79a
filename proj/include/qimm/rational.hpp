#pragma once

// Exact scalar types. Everything in the library is computed over these.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qimm {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("ratio: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Lowest terms, positive denominator, integers printed without "/1".
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace detail

// Accepts "[+-]p" or "[+-]p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = detail::trim(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!detail::is_digit_run(num) || (slash != std::string_view::npos && !detail::is_digit_run(den)))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string canonical(s.front() == '+' ? s.substr(1) : s);
    Rational q;
    if (slash != std::string_view::npos) {
        Integer d{std::string(den)};
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    q.set_str(canonical, 10);
    q.canonicalize();
    return q;
}

}  // namespace qimm
