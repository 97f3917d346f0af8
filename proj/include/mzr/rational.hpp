#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mzr {

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : m_value(value) {}
    Rational(int value) : m_value(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    // Parses "p/q" or "p" (optional leading '-'). Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    bool is_zero() const { return sgn(m_value) == 0; }
    int sign() const { return sgn(m_value); }
    bool is_integer() const { return m_value.get_den() == 1; }

    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }

    double to_double() const { return m_value.get_d(); }

    // "p/q" in lowest terms, "p" when q = 1.
    std::string to_string() const;

    const mpq_class &value() const { return m_value; }

    Rational operator-() const { return Rational(mpq_class(-m_value)); }
    Rational abs() const { return Rational(mpq_class(::abs(m_value))); }
    Rational inverse() const;

    Rational &operator+=(const Rational &o) { m_value += o.m_value; return *this; }
    Rational &operator-=(const Rational &o) { m_value -= o.m_value; return *this; }
    Rational &operator*=(const Rational &o) { m_value *= o.m_value; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace mzr
