#include <mzr/mzv.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mzr {

MzvIndex::MzvIndex(std::vector<long> entries) : m_entries(std::move(entries))
{
    if (!admissible(m_entries)) {
        std::string shown;
        for (long e : m_entries) {
            shown += (shown.empty() ? "" : ",") + std::to_string(e);
        }
        throw std::invalid_argument("not an admissible MZV index: (" + shown + ")");
    }
}

bool MzvIndex::admissible(const std::vector<long> &entries)
{
    if (entries.empty()) {
        return true;
    }
    return std::all_of(entries.begin(), entries.end(), [](long m) { return m >= 1; }) && entries.back() >= 2;
}

long MzvIndex::weight() const
{
    long w = 0;
    for (long m : m_entries) {
        w += m;
    }
    return w;
}

std::string MzvIndex::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(m_entries[i]);
    }
    return out + ")";
}

std::ostream &operator<<(std::ostream &os, const MzvIndex &m)
{
    return os << m.to_string();
}

MzvCombination::MzvCombination(std::initializer_list<std::pair<const MzvIndex, Rational>> terms)
{
    for (const auto &[m, c] : terms) {
        add(m, c);
    }
}

MzvCombination MzvCombination::constant(const Rational &c)
{
    MzvCombination out;
    out.add(MzvIndex{}, c);
    return out;
}

Rational MzvCombination::coefficient(const MzvIndex &m) const
{
    const auto it = m_terms.find(m);
    return it == m_terms.end() ? Rational(0) : it->second;
}

void MzvCombination::add(const MzvIndex &m, const Rational &coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void MzvCombination::add_scaled(const MzvCombination &other, const Rational &scale)
{
    if (scale.is_zero()) {
        return;
    }
    for (const auto &[m, c] : other.m_terms) {
        add(m, c * scale);
    }
}

MzvCombination &MzvCombination::operator+=(const MzvCombination &o)
{
    add_scaled(o, Rational(1));
    return *this;
}

MzvCombination &MzvCombination::operator-=(const MzvCombination &o)
{
    add_scaled(o, Rational(-1));
    return *this;
}

MzvCombination &MzvCombination::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[m, coeff] : m_terms) {
        coeff *= c;
    }
    return *this;
}

std::string MzvCombination::to_json() const
{
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto &[m, c] : m_terms) {
        nlohmann::ordered_json t;
        t["index"] = m.entries();
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

MzvCombination MzvCombination::from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("combination JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("combination JSON: expected {\"terms\": [...]}");
    }
    MzvCombination out;
    for (const auto &t : j["terms"]) {
        if (!t.is_object() || !t.contains("index") || !t.contains("coeff") || !t["index"].is_array() ||
            !t["coeff"].is_string()) {
            throw std::invalid_argument("combination JSON: malformed term");
        }
        std::vector<long> entries;
        for (const auto &e : t["index"]) {
            if (!e.is_number_integer()) {
                throw std::invalid_argument("combination JSON: index entries must be integers");
            }
            entries.push_back(e.get<long>());
        }
        out.add(MzvIndex(std::move(entries)), Rational::parse(t["coeff"].get<std::string>()));
    }
    return out;
}

namespace {

std::string latex_magnitude(const Rational &a)
{
    if (a.is_integer()) {
        return a.numerator().get_str();
    }
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_symbol(const MzvIndex &m)
{
    std::string out = "\\zeta(";
    for (std::size_t i = 0; i < m.depth(); ++i) {
        out += (i ? "," : "") + std::to_string(m.entries()[i]);
    }
    return out + ")";
}

template <typename Term>
std::string render(const MzvCombination::map_type &terms, Term term)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms) {
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        out += term(m, c.abs());
    }
    return out;
}

} // namespace

std::string MzvCombination::to_latex() const
{
    return render(m_terms, [](const MzvIndex &m, const Rational &a) {
        if (m.empty()) {
            return latex_magnitude(a);
        }
        return (a == Rational(1) ? std::string() : latex_magnitude(a)) + latex_symbol(m);
    });
}

std::string MzvCombination::to_plain() const
{
    return render(m_terms, [](const MzvIndex &m, const Rational &a) {
        if (m.empty()) {
            return a.to_string();
        }
        return (a == Rational(1) ? std::string() : a.to_string() + "*") + "zeta" + m.to_string();
    });
}

std::ostream &operator<<(std::ostream &os, const MzvCombination &c)
{
    return os << c.to_plain();
}

} // namespace mzr
