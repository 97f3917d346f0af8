#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <mzr/rational.hpp>

namespace mzr {

// Admissible index (m_1, ..., m_n) with m_i >= 1 and m_n >= 2, or the empty
// index standing for the rational unit zeta() = 1.
class MzvIndex {
public:
    MzvIndex() = default;
    // Throws std::invalid_argument unless the entries form an admissible index.
    explicit MzvIndex(std::vector<long> entries);
    MzvIndex(std::initializer_list<long> entries) : MzvIndex(std::vector<long>(entries)) {}

    static bool admissible(const std::vector<long> &entries);

    bool empty() const { return m_entries.empty(); }
    std::size_t depth() const { return m_entries.size(); }
    long weight() const;
    const std::vector<long> &entries() const { return m_entries; }

    // Lexicographic; the empty index sorts first.
    friend bool operator==(const MzvIndex &, const MzvIndex &) = default;
    friend auto operator<=>(const MzvIndex &, const MzvIndex &) = default;

    std::string to_string() const;

private:
    std::vector<long> m_entries;
};

std::ostream &operator<<(std::ostream &os, const MzvIndex &m);

// Finite Q-linear combination of multiple zeta values, no zero coefficients.
class MzvCombination {
public:
    using map_type = std::map<MzvIndex, Rational>;

    MzvCombination() = default;
    MzvCombination(std::initializer_list<std::pair<const MzvIndex, Rational>> terms);

    static MzvCombination constant(const Rational &c);

    const map_type &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    std::size_t size() const { return m_terms.size(); }
    Rational coefficient(const MzvIndex &m) const;

    void add(const MzvIndex &m, const Rational &coeff);
    // this += scale * other
    void add_scaled(const MzvCombination &other, const Rational &scale);

    MzvCombination &operator+=(const MzvCombination &o);
    MzvCombination &operator-=(const MzvCombination &o);
    MzvCombination &operator*=(const Rational &c);
    friend MzvCombination operator+(MzvCombination a, const MzvCombination &b) { return a += b; }
    friend MzvCombination operator-(MzvCombination a, const MzvCombination &b) { return a -= b; }
    friend MzvCombination operator*(MzvCombination a, const Rational &c) { return a *= c; }
    friend MzvCombination operator*(const Rational &c, MzvCombination a) { return a *= c; }

    friend bool operator==(const MzvCombination &, const MzvCombination &) = default;

    // {"terms":[{"index":[],"coeff":"1/6"},{"index":[2],"coeff":"1/120"}]}
    std::string to_json() const;
    // Throws std::invalid_argument on malformed input.
    static MzvCombination from_json(std::string_view text);

    // \frac{1}{6} + \frac{1}{120}\zeta(2)
    std::string to_latex() const;
    // 1/6 + 1/120*zeta(2)
    std::string to_plain() const;

private:
    map_type m_terms;
};

std::ostream &operator<<(std::ostream &os, const MzvCombination &c);

} // namespace mzr
