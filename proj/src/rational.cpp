#include <mzr/rational.hpp>

#include <stdexcept>

namespace mzr {

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational::Rational(mpq_class value) : m_value(std::move(value))
{
    m_value.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class q{std::string(den)};
    if (q == 0) {
        throw std::invalid_argument("malformed rational: zero denominator");
    }
    return Rational(mpq_class(p, q));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / m_value));
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

} // namespace mzr
