#include <mzr/reducer.hpp>

#include <sstream>

#include <json.hpp>

#include <mzr/arith.hpp>
#include <mzr/words.hpp>

namespace mzr {

SingularInput::SingularInput(IndexPoint point, RegularityVerdict verdict)
    : std::runtime_error("singular point " + point.to_string() + ": " + verdict.to_json()),
      m_point(std::move(point)), m_verdict(std::move(verdict))
{
}

RegularityViolation::RegularityViolation(std::vector<IndexPoint> path, IndexPoint child, Rational multiplier)
    : std::runtime_error("child " + child.to_string() + " with multiplier " + multiplier.to_string() +
                         " is singular"),
      m_path(std::move(path)), m_child(std::move(child)), m_multiplier(std::move(multiplier))
{
}

std::string RegularityViolation::describe() const
{
    std::ostringstream os;
    os << "regularity violation: " << what() << '\n';
    for (std::size_t i = 0; i < m_path.size(); ++i) {
        os << std::string(2 * i, ' ') << m_path[i] << '\n';
    }
    os << std::string(2 * m_path.size(), ' ') << m_child << "  <- " << classify(m_child).to_json() << '\n';
    return os.str();
}

MzvCombination ReductionTrace::replay() const
{
    std::map<IndexPoint, MzvCombination> values;
    for (const auto &step : steps) {
        MzvCombination v;
        if (step.pivot == 0) {
            v = step.terminal;
        } else {
            for (const auto &[child, mult] : step.children) {
                v.add_scaled(values.at(child), mult);
            }
        }
        values.insert_or_assign(step.point, std::move(v));
    }
    return steps.empty() ? MzvCombination{} : values.at(steps.back().point);
}

std::string ReductionTrace::to_json() const
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &step : steps) {
        nlohmann::ordered_json s;
        s["point"] = step.point.entries();
        s["pivot"] = step.pivot;
        if (step.pivot == 0) {
            s["terminal"] = nlohmann::ordered_json::parse(step.terminal.to_json());
        } else {
            nlohmann::ordered_json children = nlohmann::ordered_json::array();
            for (const auto &[child, mult] : step.children) {
                children.push_back({{"point", child.entries()}, {"multiplier", mult.to_string()}});
            }
            s["children"] = std::move(children);
        }
        out.push_back(std::move(s));
    }
    return nlohmann::ordered_json{{"steps", std::move(out)}}.dump();
}

std::size_t choose_pivot(const IndexPoint &p, PivotStrategy strategy)
{
    const std::size_t r = p.depth();
    switch (strategy.rule) {
    case PivotRule::rightmost:
        for (std::size_t j = r; j >= 1; --j) {
            if (p.at(j) <= 0) {
                return j;
            }
        }
        break;
    case PivotRule::leftmost:
        for (std::size_t j = 1; j <= r; ++j) {
            if (p.at(j) <= 0) {
                return j;
            }
        }
        break;
    case PivotRule::explicit_position:
        if (strategy.position < 1 || strategy.position > r) {
            throw std::invalid_argument("pivot j=" + std::to_string(strategy.position) + " out of range for " +
                                        p.to_string());
        }
        if (p.at(strategy.position) > 0) {
            throw std::invalid_argument("pivot j=" + std::to_string(strategy.position) +
                                        " is a positive entry of " + p.to_string());
        }
        return strategy.position;
    }
    throw std::invalid_argument("no non-positive entry to pivot on in " + p.to_string());
}

std::vector<std::pair<IndexPoint, Rational>> recurrence_children(const IndexPoint &p, std::size_t j)
{
    const std::size_t r = p.depth();
    if (r < 2 || j < 1 || j > r || p.at(j) > 0) {
        throw std::invalid_argument("recurrence needs depth >= 2 and a non-positive pivot");
    }
    const auto &n = p.entries();
    const long m = -p.at(j);
    const auto um = static_cast<std::uint32_t>(m);
    const Rational inv(1, m + 1);

    // Entries j-1, j (left) or j, j+1 (right) collapse into one entry x.
    auto left = [&](long x) {
        std::vector<long> e(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(j - 2));
        e.push_back(x);
        e.insert(e.end(), n.begin() + static_cast<std::ptrdiff_t>(j), n.end());
        return IndexPoint(std::move(e));
    };
    auto right = [&](long x) {
        std::vector<long> e(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(j - 1));
        e.push_back(x);
        e.insert(e.end(), n.begin() + static_cast<std::ptrdiff_t>(j + 1), n.end());
        return IndexPoint(std::move(e));
    };

    std::map<IndexPoint, Rational> acc;
    auto add = [&](IndexPoint child, const Rational &mult) {
        if (mult.is_zero()) {
            return;
        }
        auto [it, inserted] = acc.try_emplace(std::move(child), mult);
        if (!inserted) {
            it->second += mult;
        }
    };

    if (j >= 2) {
        const long prev = p.at(j - 1);
        add(left(prev - m - 1), -inv);
        for (std::uint32_t k = 0; k <= um; ++k) {
            add(left(prev - m + k), binomial(um, k) * zeta_nonpositive(k));
        }
    }
    if (j <= r - 1) {
        const long next = p.at(j + 1);
        add(right(next - m - 1), inv);
        for (std::uint32_t k = 0; k <= um; ++k) {
            add(right(next - m + k), -(binomial(um, k) * zeta_nonpositive(k)));
        }
        add(right(next - m), Rational(-1));
        if (j == 1) {
            add(IndexPoint(std::vector<long>(n.begin() + 1, n.end())), zeta_nonpositive(um));
        }
    }

    std::vector<std::pair<IndexPoint, Rational>> out;
    for (auto &[child, mult] : acc) {
        if (!mult.is_zero()) {
            out.emplace_back(child, mult);
        }
    }
    return out;
}

namespace {

PivotStrategy child_strategy(PivotStrategy s)
{
    return s.rule == PivotRule::explicit_position ? PivotStrategy::rightmost() : s;
}

} // namespace

const Engine::Entry &Engine::expand(const IndexPoint &p, PivotStrategy strategy, std::vector<IndexPoint> &path)
{
    Key key{p.entries(), strategy};
    if (auto it = m_memo.find(key); it != m_memo.end()) {
        return it->second;
    }

    Entry entry{{}, TraceStep{p, 0, {}, {}}};
    if (p.depth() == 1 && p.at(1) <= 0) {
        entry.value = MzvCombination::constant(zeta_nonpositive(static_cast<std::uint32_t>(-p.at(1))));
        entry.step.terminal = entry.value;
    } else if (p.all_positive()) {
        entry.value.add(MzvIndex(p.entries()), Rational(1));
        entry.step.terminal = entry.value;
    } else {
        const std::size_t j = choose_pivot(p, strategy);
        entry.step.pivot = j;
        entry.step.children = recurrence_children(p, j);
        path.push_back(p);
        for (const auto &[child, mult] : entry.step.children) {
            if (!classify(child).is_regular()) {
                throw RegularityViolation(path, child, mult);
            }
            entry.value.add_scaled(expand(child, child_strategy(strategy), path).value, mult);
        }
        path.pop_back();
    }
    return m_memo.emplace(std::move(key), std::move(entry)).first->second;
}

void Engine::collect(const IndexPoint &p, PivotStrategy strategy, std::map<Key, bool> &seen,
                     ReductionTrace &out) const
{
    Key key{p.entries(), strategy};
    if (seen.count(key)) {
        return;
    }
    seen.emplace(key, true);
    const Entry &entry = m_memo.at(key);
    for (const auto &[child, mult] : entry.step.children) {
        collect(child, child_strategy(strategy), seen, out);
    }
    out.steps.push_back(entry.step);
}

const MzvCombination &Engine::value(const IndexPoint &p, PivotStrategy strategy)
{
    if (auto verdict = classify(p); !verdict.is_regular()) {
        throw SingularInput(p, verdict);
    }
    std::vector<IndexPoint> path;
    return expand(p, strategy, path).value;
}

Reduction Engine::reduce(const IndexPoint &p, PivotStrategy strategy)
{
    Reduction out;
    out.combination = value(p, strategy);
    std::map<Key, bool> seen;
    collect(p, strategy, seen, out.trace);
    return out;
}

bool bound_check(const IndexPoint &p, const MzvCombination &c)
{
    const auto stats = positive_part_stats(p);
    for (const auto &[m, coeff] : c.terms()) {
        if (m.depth() > stats.depth || m.weight() > stats.weight) {
            return false;
        }
    }
    return true;
}

MzvCombination stuffle_expand(const MzvIndex &a, const MzvIndex &b)
{
    // Letters are m * s_1, so a sum of letters adds the integer arguments.
    auto to_word = [](const MzvIndex &m) {
        std::vector<LinearForm> letters;
        for (long e : m.entries()) {
            letters.emplace_back(1, static_cast<LinearForm::coefficient>(e));
        }
        return Word(std::move(letters));
    };
    MzvCombination out;
    const HPoly product = harmonic_product(to_word(a), to_word(b));
    for (const auto &[w, c] : product.terms()) {
        std::vector<long> entries;
        for (const auto &letter : w.letters()) {
            entries.push_back(static_cast<long>(letter.degree()));
        }
        out.add(MzvIndex(std::move(entries)), c);
    }
    return out;
}

} // namespace mzr
