#pragma once

// Test-only exact oracle built from power sums instead of the recurrence.
//
// With F_a(n) = sum_{0<m<n} m^a = sum_e c_e n^e (a polynomial found by exact
// interpolation of brute-force sums, no Bernoulli numbers involved),
//
//   zeta_r(-a, s_2, ..., s_r) = sum_e c_e zeta_{r-1}(s_2 - e, s_3, ..., s_r),
//
// and for a depth-2 point with x >= 1, y <= 0 the stuffle relation
//
//   zeta_2(x, y) = zeta(x) zeta(y) - zeta_2(y, x) - zeta(x + y)
//
// moves the non-positive entry to the front. Depth-1 values zeta(-k) use
// Bernoulli numbers from the Akiyama-Tanigawa scheme.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include <mzr/index.hpp>
#include <mzr/mzv.hpp>
#include <mzr/rational.hpp>

namespace mzr::testing {

// Bernoulli numbers with B_1 = +1/2 by the Akiyama-Tanigawa algorithm.
inline Rational bernoulli_plus(unsigned n)
{
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, static_cast<long>(m) + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
    }
    return a[0];
}

// zeta(-k): -1/2 for k = 0, -B_{k+1}/(k+1) otherwise.
inline Rational zeta_minus(unsigned k)
{
    if (k == 0) {
        return Rational(-1, 2);
    }
    return -bernoulli_plus(k + 1) * Rational(1, static_cast<long>(k) + 1);
}

// Coefficients c_0..c_{a+1} of F_a(n) = sum_{0<m<n} m^a.
inline std::vector<Rational> power_sum_poly(unsigned a)
{
    const unsigned size = a + 2;
    std::vector<std::vector<Rational>> rows(size, std::vector<Rational>(size + 1));
    for (unsigned i = 0; i < size; ++i) {
        const long n = static_cast<long>(i) + 1;
        Rational pw(1);
        for (unsigned e = 0; e < size; ++e) {
            rows[i][e] = pw;
            pw = pw * Rational(n);
        }
        Rational sum(0);
        for (long m = 1; m < n; ++m) {
            Rational t(1);
            for (unsigned e = 0; e < a; ++e) {
                t = t * Rational(m);
            }
            sum = sum + t;
        }
        rows[i][size] = sum;
    }
    for (unsigned col = 0; col < size; ++col) {
        unsigned pivot = col;
        while (rows[pivot][col].is_zero()) {
            ++pivot;
        }
        std::swap(rows[pivot], rows[col]);
        const Rational inv = rows[col][col].inverse();
        for (auto &x : rows[col]) {
            x = x * inv;
        }
        for (unsigned r = 0; r < size; ++r) {
            if (r != col && !rows[r][col].is_zero()) {
                const Rational f = rows[r][col];
                for (unsigned c = 0; c <= size; ++c) {
                    rows[r][c] = rows[r][c] - f * rows[col][c];
                }
            }
        }
    }
    std::vector<Rational> out(size);
    for (unsigned i = 0; i < size; ++i) {
        out[i] = rows[i][size];
    }
    return out;
}

// Exact value of a regular point, or nullopt when the point (or a term the
// expansion needs) is outside what the oracle can reach.
inline std::optional<MzvCombination> faulhaber_value(const std::vector<long> &n)
{
    if (n.size() == 1) {
        if (n[0] == 1) {
            return std::nullopt;
        }
        if (n[0] <= 0) {
            return MzvCombination::constant(zeta_minus(static_cast<unsigned>(-n[0])));
        }
        return MzvCombination{{MzvIndex{n[0]}, Rational(1)}};
    }
    if (!classify(IndexPoint(n)).is_regular()) {
        return std::nullopt;
    }
    if (std::all_of(n.begin(), n.end(), [](long x) { return x >= 1; })) {
        return MzvCombination{{MzvIndex(n), Rational(1)}};
    }
    MzvCombination out;
    if (n[0] <= 0) {
        const auto c = power_sum_poly(static_cast<unsigned>(-n[0]));
        for (std::size_t e = 0; e < c.size(); ++e) {
            if (c[e].is_zero()) {
                continue;
            }
            std::vector<long> rest(n.begin() + 1, n.end());
            rest[0] -= static_cast<long>(e);
            auto v = faulhaber_value(rest);
            if (!v) {
                return std::nullopt;
            }
            out.add_scaled(*v, c[e]);
        }
        return out;
    }
    if (n.size() == 2 && n[1] <= 0) {
        const long x = n[0];
        const long y = n[1];
        auto swapped = faulhaber_value({y, x});
        auto sum = faulhaber_value({x + y});
        if (!swapped || !sum || x == 1) {
            return std::nullopt;
        }
        out.add(MzvIndex{x}, zeta_minus(static_cast<unsigned>(-y)));
        out -= *swapped;
        out -= *sum;
        return out;
    }
    return std::nullopt;
}

} // namespace mzr::testing
