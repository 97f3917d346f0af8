// Closed forms for depth 2 and 3, one formula per sign pattern.
//
// Throughout, beta(k) = -zeta(-k); this is B_{k+1}/(k+1) for k >= 1 and
// +1/2 for k = 0. Depth-1 values zeta(x) stay symbolic for x >= 2 and become
// rationals for x <= 0; inner depth-2 values use closed_form_depth2.

#include <mzr/reducer.hpp>

#include <mzr/arith.hpp>

namespace mzr {

namespace {

Rational beta(long k)
{
    return -zeta_nonpositive(static_cast<std::uint32_t>(k));
}

Rational C(long n, long k)
{
    return binomial(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
}

Rational frac(long num, long den)
{
    return Rational(num, den);
}

void require_regular(const IndexPoint &p)
{
    if (auto verdict = classify(p); !verdict.is_regular()) {
        throw SingularInput(p, verdict);
    }
}

// Accumulates coefficient * (value) terms, skipping zero coefficients before
// anything is evaluated.
class terms {
public:
    explicit terms(IndexPoint origin) : m_origin(std::move(origin)) {}

    void zeta(const Rational &coeff, long x)
    {
        if (coeff.is_zero()) {
            return;
        }
        if (x == 1) {
            throw RegularityViolation({m_origin}, IndexPoint{x}, coeff);
        }
        if (x >= 2) {
            m_out.add(MzvIndex{x}, coeff);
        } else {
            m_out.add(MzvIndex{}, coeff * zeta_nonpositive(static_cast<std::uint32_t>(-x)));
        }
    }

    void zeta2(const Rational &coeff, long x, long y)
    {
        if (coeff.is_zero()) {
            return;
        }
        const IndexPoint q{x, y};
        if (!classify(q).is_regular()) {
            throw RegularityViolation({m_origin}, q, coeff);
        }
        m_out.add_scaled(closed_form_depth2(x, y), coeff);
    }

    void symbol(std::vector<long> entries) { m_out.add(MzvIndex(std::move(entries)), Rational(1)); }

    MzvCombination take() { return std::move(m_out); }

private:
    IndexPoint m_origin;
    MzvCombination m_out;
};

} // namespace

MzvCombination closed_form_depth2(long n1, long n2)
{
    const IndexPoint p{n1, n2};
    require_regular(p);
    terms t(p);
    if (n1 >= 1 && n2 >= 2) {
        t.symbol({n1, n2});
    } else if (n1 >= 1) {
        const long m = -n2;
        t.zeta(-frac(1, m + 1), n1 + n2 - 1);
        for (long k = 0; k <= m; ++k) {
            t.zeta(-C(m, k) * beta(k), n1 + n2 + k);
        }
    } else if (n2 >= 2) {
        const long a = -n1;
        t.zeta(frac(1, a + 1), n1 + n2 - 1);
        for (long k = 0; k <= a; ++k) {
            t.zeta(C(a, k) * beta(k), n1 + n2 + k);
        }
        t.zeta(-beta(a), n2); // zeta(n1) zeta(n2)
        t.zeta(Rational(-1), n1 + n2);
    } else if (n1 < 0 && n2 < 0) {
        t.zeta(frac(-1, 2), n1 + n2);
    } else if (n1 == 0) {
        // zeta_2(0, s) = zeta(s-1) - zeta(s); zeta(n2-1) is a trivial zero here.
        t.zeta(Rational(-1), n2);
    } else {
        t.zeta(frac(-1, 2), n1);
    }
    return t.take();
}

MzvCombination closed_form_depth3(long n1, long n2, long n3)
{
    const IndexPoint p{n1, n2, n3};
    require_regular(p);
    terms t(p);
    const long N = n1 + n2 + n3;
    const bool p1 = n1 >= 1;
    const bool p2 = n2 >= 1;
    const bool p3 = n3 >= 2;

    if (p1 && p2 && p3) {
        t.symbol({n1, n2, n3});
    } else if (p1 && p2) {
        const long c = -n3;
        t.zeta2(-frac(1, c + 1), n1, n2 + n3 - 1);
        for (long k = 0; k <= c; ++k) {
            t.zeta2(-C(c, k) * beta(k), n1, n2 + n3 + k);
        }
    } else if (p1 && p3) {
        const long b = -n2;
        t.zeta2(-frac(1, b + 1), n1 + n2 - 1, n3);
        t.zeta2(frac(1, b + 1), n1, n2 + n3 - 1);
        for (long k = 0; k <= b; ++k) {
            const Rational w = C(b, k) * beta(k);
            t.zeta2(-w, n1 + n2 + k, n3);
            t.zeta2(w, n1, n2 + n3 + k);
        }
        t.zeta2(Rational(-1), n1, n2 + n3);
    } else if (p2 && p3) {
        const long a = -n1;
        t.zeta2(frac(1, a + 1), n1 + n2 - 1, n3);
        for (long k = 0; k <= a; ++k) {
            t.zeta2(C(a, k) * beta(k), n1 + n2 + k, n3);
        }
        t.zeta2(-beta(a), n2, n3);
        t.zeta2(Rational(-1), n1 + n2, n3);
    } else if (p1) {
        const long b = -n2;
        const long c = -n3;
        t.zeta(frac(1, (c + 1) * (b + c + 2)), N - 2);
        for (long l = 0; l <= b + c + 1; ++l) {
            t.zeta(frac(1, c + 1) * C(b + c + 1, l) * beta(l), N - 1 + l);
        }
        for (long k = 0; k <= c; ++k) {
            t.zeta(C(c, k) * frac(1, b + c - k + 1) * beta(k), N - 1 + k);
        }
        for (long k = 0; k <= c; ++k) {
            for (long l = 0; l <= b + c - k; ++l) {
                t.zeta(C(c, k) * C(b + c - k, l) * beta(k) * beta(l), N + k + l);
            }
        }
    } else if (p2) {
        const long a = -n1;
        const long c = -n3;
        t.zeta(-frac(1, (c + 1) * (a + 1)), N - 2);
        t.zeta(frac(1, c + 1), N - 1);
        for (long l = 0; l <= a; ++l) {
            t.zeta(-frac(1, c + 1) * C(a, l) * beta(l), N - 1 + l);
        }
        for (long k = 0; k <= c; ++k) {
            const Rational w = C(c, k) * beta(k);
            t.zeta(-w * frac(1, a + 1), N + k - 1);
            t.zeta(w, N + k);
        }
        for (long k = 0; k <= c; ++k) {
            for (long l = 0; l <= a; ++l) {
                t.zeta(-C(c, k) * C(a, l) * beta(l) * beta(k), N + k + l);
            }
        }
        t.zeta2(-beta(a), n2, n3); // zeta(n1) zeta_2(n2, n3)
    } else if (p3) {
        const long a = -n1;
        const long b = -n2;
        t.zeta(frac(1, (a + 1) * (a + b + 2)), N - 2);
        t.zeta(-beta(a) * frac(1, b + 1), n2 + n3 - 1);
        t.zeta(-(frac(1, a + b + 1) + frac(1, a + 1)), N - 1);
        t.zeta(beta(a), n2 + n3);
        t.zeta(beta(a + b) + beta(a) * beta(b) - frac(1, a + 1) * beta(a + b + 1), n3);
        t.zeta(Rational(1), N);
        for (long l = 0; l <= a + b + 1; ++l) {
            t.zeta(frac(1, a + 1) * C(a + b + 1, l) * beta(l), N - 1 + l);
        }
        for (long k = 0; k <= a; ++k) {
            t.zeta(C(a, k) * beta(k) * frac(1, a + b - k + 1), N - 1 + k);
        }
        for (long k = 0; k <= a; ++k) {
            for (long l = 0; l <= a + b - k; ++l) {
                t.zeta(C(a, k) * C(a + b - k, l) * beta(l) * beta(k), N + k + l);
            }
        }
        for (long k = 0; k <= a; ++k) {
            const Rational w = C(a, k) * beta(k);
            t.zeta(-w * beta(a + b - k), n3);
            t.zeta(-w, N + k);
        }
        for (long l = 0; l <= b; ++l) {
            t.zeta(-beta(a) * C(b, l) * beta(l), n2 + n3 + l);
        }
        for (long l = 0; l <= a + b; ++l) {
            t.zeta(-C(a + b, l) * beta(l), N + l);
        }
    } else {
        // Every all-non-positive depth-3 point is singular; require_regular already threw.
        throw SingularInput(p, classify(p));
    }
    return t.take();
}

} // namespace mzr
