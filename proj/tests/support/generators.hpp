#pragma once

// Hand-rolled random generators for the property tests.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <mzr/index.hpp>
#include <mzr/mzv.hpp>
#include <mzr/words.hpp>

namespace mzr::testing {

inline std::mt19937 &rng()
{
    static std::mt19937 engine(0x5eed);
    return engine;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline long uniform_long(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

// A letter in at most `vars` variables with coefficients in [0, max_coeff].
inline LinearForm letter(std::uint32_t vars = 3, std::uint32_t max_coeff = 3)
{
    std::map<LinearForm::variable, LinearForm::coefficient> c;
    for (std::uint32_t v = 1; v <= vars; ++v) {
        c[v] = static_cast<std::uint32_t>(uniform(0, max_coeff));
    }
    if (std::all_of(c.begin(), c.end(), [](const auto &kv) { return kv.second == 0; })) {
        c[static_cast<std::uint32_t>(uniform(1, vars))] = static_cast<std::uint32_t>(uniform(1, max_coeff));
    }
    return LinearForm(std::move(c));
}

inline std::vector<LinearForm> letters(std::size_t min_len, std::size_t max_len)
{
    std::vector<LinearForm> out(uniform(min_len, max_len), LinearForm(1));
    for (auto &u : out) {
        u = letter();
    }
    return out;
}

inline Word word(std::size_t min_len, std::size_t max_len)
{
    return Word(letters(min_len, max_len));
}

inline MzvIndex admissible_index(std::size_t max_depth, long max_weight)
{
    for (;;) {
        std::vector<long> e(uniform(1, max_depth));
        for (auto &x : e) {
            x = uniform_long(1, 4);
        }
        e.back() = std::max(e.back(), 2L);
        MzvIndex m(e);
        if (m.weight() <= max_weight) {
            return m;
        }
    }
}

// A regular point with at least one non-positive entry.
inline IndexPoint mixed_regular_point(std::size_t depth, long lo, long hi)
{
    for (;;) {
        std::vector<long> e(depth);
        for (auto &x : e) {
            x = uniform_long(lo, hi);
        }
        IndexPoint p(e);
        if (!p.all_positive() && classify(p).is_regular()) {
            return p;
        }
    }
}

} // namespace mzr::testing
