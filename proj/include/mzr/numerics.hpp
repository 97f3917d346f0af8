#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include <mzr/index.hpp>
#include <mzr/mzv.hpp>
#include <mzr/reducer.hpp>

namespace mzr {

struct EvalConfig {
    std::uint64_t truncation = 1'000'000;
    bool tail_correction = true;

    // Throws std::invalid_argument when truncation < 100.
    void validate() const;
};

struct NumericValue {
    double value = 0.0;
    double error_bound = 0.0;
};

// Series evaluation of admissible MZVs by iterated prefix sums
//
//   P_1(k) = sum_{j<k} j^{-m_1},   P_t(k) = sum_{j<k} P_{t-1}(j) j^{-m_t},
//
// truncated at N with an integral tail estimate. Cost is O(depth * N).
//
// The tail sum_{j>N} P_{d-1}(j) j^{-m_d} is estimated by expanding the inner
// prefix sum around N: each trailing run of 1s in m_1..m_{d-1} contributes a
// log(x/N)^i / i! term, and int_N^inf log(x/N)^i/i! x^{-m} dx = N^{1-m}/(m-1)^{i+1}.
// error_bound is twice the tail estimate (with or without the correction
// applied) plus a worst-case floating-point rounding term.
NumericValue eval_mzv_uncached(const MzvIndex &m, const EvalConfig &cfg);

// Memoizes eval_mzv results keyed by (index, N), optionally persisted as a
// JSON object {"2,3|1000000": {"value": ..., "bound": ...}, ...}.
// All members are safe to call from several threads.
class Evaluator {
public:
    explicit Evaluator(EvalConfig cfg = {}, std::optional<std::filesystem::path> cache_file = std::nullopt);

    const EvalConfig &config() const { return m_cfg; }

    // Empty index: exactly 1 with zero error. Throws std::invalid_argument
    // when the configuration is invalid.
    NumericValue eval_mzv(const MzvIndex &m);

    // sum coeff * eval_mzv(index), summed in increasing magnitude order;
    // error_bound = sum |coeff| * per-symbol bound.
    NumericValue eval_combination(const MzvCombination &c);

    // eval_combination(reduce(p, strategy).combination). Throws SingularInput.
    NumericValue eval_point(Engine &engine, const IndexPoint &p, PivotStrategy strategy = {});

    // Writes the cache file if one was configured. Called by the destructor.
    void save() const;
    ~Evaluator();

    Evaluator(const Evaluator &) = delete;
    Evaluator &operator=(const Evaluator &) = delete;

    std::size_t cache_size() const;

private:
    static std::string key(const MzvIndex &m, std::uint64_t n);

    EvalConfig m_cfg;
    std::optional<std::filesystem::path> m_file;
    mutable std::mutex m_mutex;
    std::map<std::string, NumericValue> m_cache;
    bool m_dirty = false;
};

// Environment variable naming the default numeric cache file.
inline constexpr const char *cache_env_var = "MZR_CACHE";

} // namespace mzr
