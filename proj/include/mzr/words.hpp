#pragma once

// The harmonic algebra: Q-linear combinations of words whose letters are
// non-negative integer combinations of formal variables s_1, s_2, ...

#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <mzr/rational.hpp>

namespace mzr {

// sum_i a_i s_i with every stored a_i > 0 and at least one entry.
class LinearForm {
public:
    using variable = std::uint32_t;
    using coefficient = std::uint32_t;

    // coeff * s_var. Throws std::invalid_argument when var == 0 or coeff == 0.
    LinearForm(variable var, coefficient coeff = 1);
    // Throws std::invalid_argument when every coefficient is zero.
    explicit LinearForm(std::map<variable, coefficient> coefficients);

    const std::map<variable, coefficient> &coefficients() const { return m_coeffs; }
    // Total degree sum_i a_i.
    std::uint64_t degree() const;

    LinearForm &operator+=(const LinearForm &o);
    friend LinearForm operator+(LinearForm a, const LinearForm &b) { return a += b; }

    friend bool operator==(const LinearForm &, const LinearForm &) = default;
    friend auto operator<=>(const LinearForm &, const LinearForm &) = default;

    // "s1", "s1+s2", "2s3"
    std::string to_string() const;

private:
    std::map<variable, coefficient> m_coeffs;
};

// A finite sequence of letters; the empty word is the unit 1.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<LinearForm> letters) : m_letters(letters) {}
    explicit Word(std::vector<LinearForm> letters) : m_letters(std::move(letters)) {}

    std::size_t length() const { return m_letters.size(); }
    bool empty() const { return m_letters.empty(); }
    const std::vector<LinearForm> &letters() const { return m_letters; }
    const LinearForm &operator[](std::size_t i) const { return m_letters[i]; }

    // |w| = u_1 + ... + u_k. Throws std::logic_error on the empty word.
    LinearForm weight() const;
    Word reversed() const;
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t n) const;
    Word appended(const LinearForm &u) const;
    Word concatenated(const Word &o) const;

    friend bool operator==(const Word &, const Word &) = default;
    friend auto operator<=>(const Word &, const Word &) = default;

    // "(s1, s1+s2, 2s3)"; the unit renders as "1".
    std::string to_string() const;

private:
    std::vector<LinearForm> m_letters;
};

// Element of the harmonic algebra in canonical form (no zero coefficients).
class HPoly {
public:
    using map_type = std::map<Word, Rational>;

    HPoly() = default;
    HPoly(const Word &w, Rational coeff = Rational(1));

    static HPoly unit() { return HPoly(Word{}); }

    const map_type &terms() const { return m_terms; }
    bool is_zero() const { return m_terms.empty(); }
    Rational coefficient(const Word &w) const;

    void add(const Word &w, const Rational &coeff);
    HPoly &operator+=(const HPoly &o);
    HPoly &operator-=(const HPoly &o);
    HPoly &operator*=(const Rational &c);
    friend HPoly operator+(HPoly a, const HPoly &b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly &b) { return a -= b; }
    friend HPoly operator*(HPoly a, const Rational &c) { return a *= c; }
    friend HPoly operator*(const Rational &c, HPoly a) { return a *= c; }

    friend bool operator==(const HPoly &, const HPoly &) = default;

    std::string to_string() const;

private:
    map_type m_terms;
};

// Element of H (x) H, keyed by ordered pairs of words.
class TensorPoly {
public:
    using map_type = std::map<std::pair<Word, Word>, Rational>;

    const map_type &terms() const { return m_terms; }
    void add(const Word &left, const Word &right, const Rational &coeff);

    friend bool operator==(const TensorPoly &, const TensorPoly &) = default;

private:
    map_type m_terms;
};

std::ostream &operator<<(std::ostream &os, const LinearForm &u);
std::ostream &operator<<(std::ostream &os, const Word &w);
std::ostream &operator<<(std::ostream &os, const HPoly &p);

// Harmonic (stuffle) product, bilinear.
HPoly harmonic_product(const Word &a, const Word &b);
HPoly harmonic_product(const HPoly &a, const HPoly &b);

// Deconcatenation coproduct: each of the l(w)+1 cuts with coefficient 1.
TensorPoly coproduct(const Word &w);

// All words obtained from `letters` by merging runs of consecutive letters
// into their sum, one per comma/plus mask (2^(n-1) of them for n letters).
std::vector<Word> block_merges(std::span<const LinearForm> letters);

// f(1) = 1; otherwise the unsigned sum of rev(|b_1|, ..., |b_k|) over all
// decompositions of w into nonempty consecutive blocks.
HPoly f_map(const Word &w);

// S(w) = (-1)^{l(w)} f(w).
HPoly antipode(const Word &w);

// * o (S (x) id) o Delta applied to w. Zero for every nonempty word, 1 for w = 1.
HPoly hopf_defect(const Word &w);

// (u_1..u_r) + sum_{i=1}^{r} (-1)^i sum_{bullets} (u_i . ... . u_1) * (u_{i+1}..u_r),
// which vanishes identically. Throws std::invalid_argument when letters is empty.
HPoly telescoped_word_sum(std::span<const LinearForm> letters);

// Appends u to every word of p: the ({p}, u) notation.
HPoly append_letter(const HPoly &p, const LinearForm &u);

// Left side (w,u) * (v_1..v_n) and the expanded right side of the
// deconcatenation identity for that product. Both must agree.
// Throws std::invalid_argument when v is empty.
std::pair<HPoly, HPoly> deconcatenation_identity_sides(const Word &w, const LinearForm &u, std::span<const LinearForm> v);

} // namespace mzr
