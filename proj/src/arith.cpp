#include <mzr/arith.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzr {

namespace {

struct bernoulli_table {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

bernoulli_table &table()
{
    static bernoulli_table t;
    return t;
}

mpz_class binomial_z(std::uint32_t n, std::uint32_t k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

Rational bernoulli(std::uint32_t n)
{
    auto &t = table();
    std::lock_guard lock(t.mutex);
    auto &b = t.values;
    while (b.size() <= n) {
        const auto m = static_cast<std::uint32_t>(b.size());
        if (m >= 3 && m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
        mpq_class acc = 0;
        for (std::uint32_t k = 0; k < m; ++k) {
            if (!b[k].is_zero()) {
                acc += mpq_class(binomial_z(m + 1, k)) * b[k].value();
            }
        }
        b.emplace_back(mpq_class(-acc / (m + 1)));
    }
    return b[n];
}

Rational zeta_nonpositive(std::uint32_t n)
{
    if (n == 0) {
        return Rational(-1, 2);
    }
    return -bernoulli(n + 1) / Rational(static_cast<long>(n) + 1);
}

Rational binomial(std::uint32_t n, std::uint32_t k)
{
    if (k > n) {
        throw std::invalid_argument("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k > n");
    }
    return Rational(mpq_class(binomial_z(n, k)));
}

} // namespace mzr
