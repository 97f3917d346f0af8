#include <mzr/words.hpp>

#include <sstream>
#include <stdexcept>

namespace mzr {

LinearForm::LinearForm(variable var, coefficient coeff)
{
    if (var == 0 || coeff == 0) {
        throw std::invalid_argument("linear form needs a positive variable index and coefficient");
    }
    m_coeffs.emplace(var, coeff);
}

LinearForm::LinearForm(std::map<variable, coefficient> coefficients)
{
    for (const auto &[var, c] : coefficients) {
        if (var == 0) {
            throw std::invalid_argument("variable indices start at 1");
        }
        if (c != 0) {
            m_coeffs.emplace(var, c);
        }
    }
    if (m_coeffs.empty()) {
        throw std::invalid_argument("linear form must have a positive coefficient");
    }
}

std::uint64_t LinearForm::degree() const
{
    std::uint64_t d = 0;
    for (const auto &[var, c] : m_coeffs) {
        d += c;
    }
    return d;
}

LinearForm &LinearForm::operator+=(const LinearForm &o)
{
    for (const auto &[var, c] : o.m_coeffs) {
        m_coeffs[var] += c;
    }
    return *this;
}

std::string LinearForm::to_string() const
{
    std::string out;
    for (const auto &[var, c] : m_coeffs) {
        if (!out.empty()) {
            out += '+';
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        out += 's' + std::to_string(var);
    }
    return out;
}

LinearForm Word::weight() const
{
    if (m_letters.empty()) {
        throw std::logic_error("weight of the empty word");
    }
    LinearForm w = m_letters.front();
    for (std::size_t i = 1; i < m_letters.size(); ++i) {
        w += m_letters[i];
    }
    return w;
}

Word Word::reversed() const
{
    return Word(std::vector<LinearForm>(m_letters.rbegin(), m_letters.rend()));
}

Word Word::prefix(std::size_t n) const
{
    return Word(std::vector<LinearForm>(m_letters.begin(), m_letters.begin() + static_cast<std::ptrdiff_t>(n)));
}

Word Word::suffix_from(std::size_t n) const
{
    return Word(std::vector<LinearForm>(m_letters.begin() + static_cast<std::ptrdiff_t>(n), m_letters.end()));
}

Word Word::appended(const LinearForm &u) const
{
    auto letters = m_letters;
    letters.push_back(u);
    return Word(std::move(letters));
}

Word Word::concatenated(const Word &o) const
{
    auto letters = m_letters;
    letters.insert(letters.end(), o.m_letters.begin(), o.m_letters.end());
    return Word(std::move(letters));
}

std::string Word::to_string() const
{
    if (m_letters.empty()) {
        return "1";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < m_letters.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += m_letters[i].to_string();
    }
    return out + ")";
}

HPoly::HPoly(const Word &w, Rational coeff)
{
    add(w, coeff);
}

Rational HPoly::coefficient(const Word &w) const
{
    const auto it = m_terms.find(w);
    return it == m_terms.end() ? Rational(0) : it->second;
}

void HPoly::add(const Word &w, const Rational &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

HPoly &HPoly::operator+=(const HPoly &o)
{
    for (const auto &[w, c] : o.m_terms) {
        add(w, c);
    }
    return *this;
}

HPoly &HPoly::operator-=(const HPoly &o)
{
    for (const auto &[w, c] : o.m_terms) {
        add(w, -c);
    }
    return *this;
}

HPoly &HPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[w, coeff] : m_terms) {
        coeff *= c;
    }
    return *this;
}

std::string HPoly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : m_terms) {
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << '-';
        }
        first = false;
        const Rational a = c.abs();
        if (a != Rational(1)) {
            os << a << '*';
        }
        os << w;
    }
    return os.str();
}

void TensorPoly::add(const Word &left, const Word &right, const Rational &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace({left, right}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

std::ostream &operator<<(std::ostream &os, const LinearForm &u)
{
    return os << u.to_string();
}

std::ostream &operator<<(std::ostream &os, const Word &w)
{
    return os << w.to_string();
}

std::ostream &operator<<(std::ostream &os, const HPoly &p)
{
    return os << p.to_string();
}

namespace {

using product_memo = std::map<std::pair<Word, Word>, HPoly>;

// (w_1,u_1)*(w_2,u_2) = ({w_1*(w_2,u_2)},u_1) + ({(w_1,u_1)*w_2},u_2) + ({w_1*w_2},u_1+u_2)
const HPoly &word_product(const Word &a, const Word &b, product_memo &memo)
{
    auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    HPoly result;
    if (a.empty()) {
        result = HPoly(b);
    } else if (b.empty()) {
        result = HPoly(a);
    } else {
        const Word a_head = a.prefix(a.length() - 1);
        const Word b_head = b.prefix(b.length() - 1);
        const LinearForm &ua = a.letters().back();
        const LinearForm &ub = b.letters().back();
        result += append_letter(word_product(a_head, b, memo), ua);
        result += append_letter(word_product(a, b_head, memo), ub);
        result += append_letter(word_product(a_head, b_head, memo), ua + ub);
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

} // namespace

HPoly harmonic_product(const Word &a, const Word &b)
{
    product_memo memo;
    return word_product(a, b, memo);
}

HPoly harmonic_product(const HPoly &a, const HPoly &b)
{
    product_memo memo;
    HPoly result;
    for (const auto &[wa, ca] : a.terms()) {
        for (const auto &[wb, cb] : b.terms()) {
            const Rational c = ca * cb;
            for (const auto &[w, cw] : word_product(wa, wb, memo).terms()) {
                result.add(w, c * cw);
            }
        }
    }
    return result;
}

TensorPoly coproduct(const Word &w)
{
    TensorPoly t;
    for (std::size_t cut = 0; cut <= w.length(); ++cut) {
        t.add(w.prefix(cut), w.suffix_from(cut), Rational(1));
    }
    return t;
}

std::vector<Word> block_merges(std::span<const LinearForm> letters)
{
    std::vector<Word> out;
    if (letters.empty()) {
        out.emplace_back();
        return out;
    }
    const std::size_t gaps = letters.size() - 1;
    if (gaps >= 8 * sizeof(unsigned long) - 1) {
        throw std::length_error("too many letters for mask enumeration");
    }
    // bit i set: the gap after letters[i] is a '+'
    for (unsigned long mask = 0; mask < (1UL << gaps); ++mask) {
        std::vector<LinearForm> merged;
        merged.push_back(letters[0]);
        for (std::size_t i = 1; i < letters.size(); ++i) {
            if (mask & (1UL << (i - 1))) {
                merged.back() += letters[i];
            } else {
                merged.push_back(letters[i]);
            }
        }
        out.emplace_back(std::move(merged));
    }
    return out;
}

HPoly f_map(const Word &w)
{
    if (w.empty()) {
        return HPoly::unit();
    }
    // rev(|b_1|,...,|b_k|) over decompositions of w equals the block merges of rev(w).
    const Word r = w.reversed();
    HPoly out;
    for (const auto &merged : block_merges(r.letters())) {
        out.add(merged, Rational(1));
    }
    return out;
}

HPoly antipode(const Word &w)
{
    HPoly f = f_map(w);
    if (w.length() % 2 == 1) {
        f *= Rational(-1);
    }
    return f;
}

HPoly hopf_defect(const Word &w)
{
    HPoly out;
    const TensorPoly cuts = coproduct(w);
    for (const auto &[halves, coeff] : cuts.terms()) {
        out += harmonic_product(antipode(halves.first), HPoly(halves.second)) * coeff;
    }
    return out;
}

HPoly telescoped_word_sum(std::span<const LinearForm> letters)
{
    if (letters.empty()) {
        throw std::invalid_argument("telescoped_word_sum needs at least one letter");
    }
    const std::size_t r = letters.size();
    HPoly out(Word(std::vector<LinearForm>(letters.begin(), letters.end())));
    for (std::size_t i = 1; i <= r; ++i) {
        // u_i . u_{i-1} . ... . u_1
        const std::vector<LinearForm> head(letters.rend() - static_cast<std::ptrdiff_t>(i), letters.rend());
        const Word tail(std::vector<LinearForm>(letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end()));
        const Rational sign = (i % 2 == 1) ? Rational(-1) : Rational(1);
        for (const auto &merged : block_merges(head)) {
            out += harmonic_product(merged, tail) * sign;
        }
    }
    return out;
}

HPoly append_letter(const HPoly &p, const LinearForm &u)
{
    HPoly out;
    for (const auto &[w, c] : p.terms()) {
        out.add(w.appended(u), c);
    }
    return out;
}

std::pair<HPoly, HPoly> deconcatenation_identity_sides(const Word &w, const LinearForm &u,
                                                       std::span<const LinearForm> v)
{
    if (v.empty()) {
        throw std::invalid_argument("deconcatenation identity needs n >= 1 letters v");
    }
    const std::size_t n = v.size();
    const Word vw(std::vector<LinearForm>(v.begin(), v.end()));
    const Word wu = w.appended(u);

    HPoly left = harmonic_product(wu, vw);

    HPoly right(wu.concatenated(vw));
    {
        std::vector<LinearForm> merged_first = w.letters();
        merged_first.push_back(u + v[0]);
        merged_first.insert(merged_first.end(), v.begin() + 1, v.end());
        right.add(Word(std::move(merged_first)), Rational(1));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        // (v_i . ... . v_1)
        const std::vector<LinearForm> head(v.rend() - static_cast<std::ptrdiff_t>(i), v.rend());
        const Word tail(std::vector<LinearForm>(v.begin() + static_cast<std::ptrdiff_t>(i), v.end()));
        const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
        for (const auto &merged : block_merges(head)) {
            const HPoly inner = append_letter(harmonic_product(w, merged), u);
            right += harmonic_product(inner, HPoly(tail)) * sign;
        }
    }
    return {std::move(left), std::move(right)};
}

} // namespace mzr
