#include <mzr/numerics.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace mzr {

void EvalConfig::validate() const
{
    if (truncation < 100) {
        throw std::invalid_argument("truncation N must be >= 100");
    }
}

NumericValue eval_mzv_uncached(const MzvIndex &m, const EvalConfig &cfg)
{
    cfg.validate();
    if (m.empty()) {
        return {1.0, 0.0};
    }
    const auto &e = m.entries();
    const std::size_t d = e.size();
    const long max_exp = *std::max_element(e.begin(), e.end());

    // prefix[t] = P_t(j), prefix[0] = 1
    std::vector<double> prefix(d + 1, 0.0);
    prefix[0] = 1.0;
    std::vector<double> powers(static_cast<std::size_t>(max_exp) + 1, 1.0);
    for (std::uint64_t j = 1; j <= cfg.truncation; ++j) {
        const double inv = 1.0 / static_cast<double>(j);
        for (long k = 1; k <= max_exp; ++k) {
            powers[static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(k - 1)] * inv;
        }
        for (std::size_t t = d; t >= 1; --t) {
            prefix[t] += prefix[t - 1] * powers[static_cast<std::size_t>(e[t - 1])];
        }
    }

    const double x = static_cast<double>(cfg.truncation) + 0.5;
    const double last = static_cast<double>(e[d - 1]);
    double tail = 0.0;
    double scale = 1.0 / (last - 1.0);
    // Log terms from the run of 1s directly in front of the last entry.
    for (std::size_t i = 0;; ++i) {
        tail += prefix[d - 1 - i] * scale;
        if (d - 1 - i == 0 || e[d - 2 - i] != 1) {
            break;
        }
        scale /= (last - 1.0);
    }
    tail *= std::pow(x, 1.0 - last);

    NumericValue out;
    out.value = prefix[d] + (cfg.tail_correction ? tail : 0.0);
    // Each of the d running sums absorbs at most N roundings of its own size.
    const double rounding = static_cast<double>(d + 1) * static_cast<double>(cfg.truncation) *
                            std::numeric_limits<double>::epsilon() * std::abs(out.value);
    out.error_bound = 2.0 * std::abs(tail) + rounding;
    return out;
}

Evaluator::Evaluator(EvalConfig cfg, std::optional<std::filesystem::path> cache_file)
    : m_cfg(cfg), m_file(std::move(cache_file))
{
    m_cfg.validate();
    if (!m_file || !std::filesystem::exists(*m_file)) {
        return;
    }
    std::ifstream in(*m_file);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &ex) {
        throw std::runtime_error("numeric cache " + m_file->string() + " is not valid JSON: " + ex.what());
    }
    if (!j.is_object()) {
        throw std::runtime_error("numeric cache " + m_file->string() + " must be a JSON object");
    }
    for (const auto &[k, v] : j.items()) {
        m_cache[k] = NumericValue{v.at("value").get<double>(), v.at("bound").get<double>()};
    }
}

Evaluator::~Evaluator()
{
    try {
        save();
    } catch (...) {
    }
}

void Evaluator::save() const
{
    std::lock_guard lock(m_mutex);
    if (!m_file || !m_dirty) {
        return;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto &[k, v] : m_cache) {
        j[k] = {{"value", v.value}, {"bound", v.error_bound}};
    }
    const auto tmp = m_file->string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) {
            throw std::runtime_error("cannot write numeric cache " + tmp);
        }
        out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, *m_file);
}

std::size_t Evaluator::cache_size() const
{
    std::lock_guard lock(m_mutex);
    return m_cache.size();
}

std::string Evaluator::key(const MzvIndex &m, std::uint64_t n)
{
    std::string k;
    for (std::size_t i = 0; i < m.depth(); ++i) {
        k += (i ? "," : "") + std::to_string(m.entries()[i]);
    }
    return k + "|" + std::to_string(n);
}

NumericValue Evaluator::eval_mzv(const MzvIndex &m)
{
    if (m.empty()) {
        return {1.0, 0.0};
    }
    const std::string k = key(m, m_cfg.truncation) + (m_cfg.tail_correction ? "" : "|raw");
    {
        std::lock_guard lock(m_mutex);
        if (auto it = m_cache.find(k); it != m_cache.end()) {
            return it->second;
        }
    }
    const NumericValue v = eval_mzv_uncached(m, m_cfg);
    std::lock_guard lock(m_mutex);
    m_cache.emplace(k, v);
    m_dirty = true;
    return v;
}

NumericValue Evaluator::eval_combination(const MzvCombination &c)
{
    std::vector<double> parts;
    NumericValue out;
    for (const auto &[m, coeff] : c.terms()) {
        const NumericValue v = eval_mzv(m);
        // Exact coefficient until the last multiplication.
        const double cd = coeff.to_double();
        parts.push_back(cd * v.value);
        out.error_bound += std::abs(cd) * v.error_bound;
    }
    std::sort(parts.begin(), parts.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
    for (double p : parts) {
        out.value += p;
    }
    return out;
}

NumericValue Evaluator::eval_point(Engine &engine, const IndexPoint &p, PivotStrategy strategy)
{
    return eval_combination(engine.value(p, strategy));
}

} // namespace mzr
