#include <mzr/selftest.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <mzr/arith.hpp>
#include <mzr/index.hpp>
#include <mzr/numerics.hpp>
#include <mzr/reducer.hpp>
#include <mzr/words.hpp>

namespace mzr {

namespace {

constexpr std::size_t max_recorded_failures = 5;

class Suite {
public:
    explicit Suite(std::string name) { m_result.name = std::move(name); }

    void check(bool ok, const std::function<std::string()> &what)
    {
        if (ok) {
            ++m_result.passed;
            return;
        }
        ++m_result.failed;
        if (m_result.failures.size() < max_recorded_failures) {
            m_result.failures.push_back(what());
        }
    }

    // Runs body and records any exception as a failure.
    template <class F> void guarded(const std::string &label, F &&body)
    {
        try {
            body();
        } catch (const std::exception &ex) {
            check(false, [&] { return label + ": " + ex.what(); });
        }
    }

    SuiteResult take() { return std::move(m_result); }

private:
    SuiteResult m_result;
};

LinearForm random_letter(std::mt19937 &rng, std::uint32_t vars, std::uint32_t max_coeff)
{
    std::uniform_int_distribution<std::uint32_t> coeff(0, max_coeff);
    std::map<LinearForm::variable, LinearForm::coefficient> c;
    for (std::uint32_t v = 1; v <= vars; ++v) {
        c[v] = coeff(rng);
    }
    if (std::all_of(c.begin(), c.end(), [](const auto &kv) { return kv.second == 0; })) {
        c[std::uniform_int_distribution<std::uint32_t>(1, vars)(rng)] = 1;
    }
    return LinearForm(std::move(c));
}

std::vector<LinearForm> random_letters(std::mt19937 &rng, std::size_t min_len, std::size_t max_len)
{
    const auto len = std::uniform_int_distribution<std::size_t>(min_len, max_len)(rng);
    std::vector<LinearForm> out;
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(random_letter(rng, 3, 3));
    }
    return out;
}

// The explicit regularity conditions for depth 2 and 3.
bool listed_regular(const std::vector<long> &n)
{
    auto pair_ok = [](long a, long b) {
        const long s = a + b;
        return s > 2 || (s < 0 && (-s) % 2 == 1);
    };
    if (n.size() == 2) {
        return n[1] != 1 && pair_ok(n[0], n[1]);
    }
    return n[2] != 1 && pair_ok(n[1], n[2]) && n[0] + n[1] + n[2] > 3;
}

SuiteResult word_identities(std::mt19937 &rng)
{
    Suite s("word identities");
    for (int i = 0; i < 100; ++i) {
        const Word w(random_letters(rng, 1, 4));
        s.guarded(w.to_string(), [&] {
            s.check(hopf_defect(w).is_zero(), [&] { return "hopf defect " + w.to_string(); });
        });
    }
    for (int i = 0; i < 60; ++i) {
        const auto letters = random_letters(rng, 1, 3);
        s.guarded("telescoped", [&] {
            s.check(telescoped_word_sum(letters).is_zero(),
                    [&] { return "telescoped " + Word(letters).to_string(); });
        });
        const Word w(random_letters(rng, 0, 3));
        const LinearForm u = random_letter(rng, 3, 3);
        const auto v = random_letters(rng, 1, 3);
        s.guarded("deconcatenation", [&] {
            const auto [left, right] = deconcatenation_identity_sides(w, u, v);
            s.check(left == right, [&] {
                return "deconcatenation " + w.to_string() + " " + u.to_string() + " " + Word(v).to_string();
            });
        });
    }
    return s.take();
}

SuiteResult stuffle_laws(std::mt19937 &rng)
{
    Suite s("stuffle laws");
    for (int i = 0; i < 60; ++i) {
        const Word a(random_letters(rng, 0, 3));
        const Word b(random_letters(rng, 0, 3));
        const Word c(random_letters(rng, 0, 2));
        s.check(harmonic_product(a, b) == harmonic_product(b, a),
                [&] { return "commutativity " + a.to_string() + " " + b.to_string(); });
        const HPoly ab_c = harmonic_product(harmonic_product(a, b), HPoly(c));
        const HPoly a_bc = harmonic_product(HPoly(a), harmonic_product(b, c));
        s.check(ab_c == a_bc, [&] {
            return "associativity " + a.to_string() + " " + b.to_string() + " " + c.to_string();
        });
        s.check(harmonic_product(a, Word{}) == HPoly(a), [&] { return "unit " + a.to_string(); });
    }
    return s.take();
}

SuiteResult classifier()
{
    Suite s("classifier");
    for (long a = -10; a <= 10; ++a) {
        for (long b = -10; b <= 10; ++b) {
            const IndexPoint p{a, b};
            s.check(classify(p).is_regular() == listed_regular(p.entries()), [&] { return p.to_string(); });
        }
    }
    for (long a = -6; a <= 6; ++a) {
        for (long b = -6; b <= 6; ++b) {
            for (long c = -6; c <= 6; ++c) {
                const IndexPoint p{a, b, c};
                const bool regular = classify(p).is_regular();
                s.check(regular == listed_regular(p.entries()), [&] { return p.to_string(); });
                if (a <= 0 && b <= 0 && c <= 0) {
                    s.check(!regular, [&] { return "non-positive " + p.to_string(); });
                }
            }
        }
    }
    return s.take();
}

SuiteResult depth2_exact()
{
    Suite s("depth-2 exact equivalence");
    Engine engine;
    for (long a = -6; a <= 8; ++a) {
        for (long b = -6; b <= 8; ++b) {
            const IndexPoint p{a, b};
            if (!classify(p).is_regular()) {
                continue;
            }
            s.guarded(p.to_string(), [&] {
                const MzvCombination oracle = closed_form_depth2(a, b);
                for (auto strategy : {PivotStrategy::rightmost(), PivotStrategy::leftmost()}) {
                    s.check(engine.value(p, strategy) == oracle, [&] { return p.to_string(); });
                }
            });
        }
    }
    return s.take();
}

std::vector<IndexPoint> depth4_sample(std::mt19937 &rng, std::size_t count)
{
    std::uniform_int_distribution<long> entry(-3, 5);
    std::vector<IndexPoint> out;
    while (out.size() < count) {
        IndexPoint p{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (!p.all_positive() && classify(p).is_regular()) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

SuiteResult trace_and_bound(std::mt19937 &rng)
{
    Suite s("trace replay and bound");
    Engine engine;
    std::vector<IndexPoint> points;
    for (long a = -4; a <= 6; ++a) {
        for (long b = -4; b <= 6; ++b) {
            points.push_back(IndexPoint{a, b});
            for (long c = -4; c <= 6; c += 2) {
                points.push_back(IndexPoint{a, b, c});
            }
        }
    }
    for (auto &p : depth4_sample(rng, 20)) {
        points.push_back(std::move(p));
    }
    for (const auto &p : points) {
        if (!classify(p).is_regular()) {
            continue;
        }
        s.guarded(p.to_string(), [&] {
            const Reduction r = engine.reduce(p);
            s.check(r.trace.replay() == r.combination, [&] { return "replay " + p.to_string(); });
            s.check(bound_check(p, r.combination), [&] { return "bound " + p.to_string(); });
        });
    }
    return s.take();
}

SuiteResult numeric_checks(std::mt19937 &rng, std::uint64_t truncation)
{
    Suite s("numeric cross-checks");
    Evaluator eval(EvalConfig{truncation, true});
    constexpr double tol = 1e-6;
    const double pi2 = std::numbers::pi * std::numbers::pi;

    auto close = [&](double x, double y, const std::string &label) {
        s.check(std::abs(x - y) < tol, [&] {
            std::ostringstream os;
            os.precision(12);
            os << label << ": " << x << " vs " << y;
            return os.str();
        });
    };

    const struct {
        MzvIndex index;
        double oracle;
    } constants[] = {
        {{2}, pi2 / 6},
        {{4}, pi2 * pi2 / 90},
        {{2, 2}, pi2 * pi2 / 120},
        {{1, 2}, 1.2020569031595942},
        {{3}, 1.2020569031595942},
    };
    for (const auto &[index, oracle] : constants) {
        const NumericValue v = eval.eval_mzv(index);
        close(v.value, oracle, index.to_string());
        s.check(std::abs(v.value - oracle) <= v.error_bound, [&] { return "bound honesty " + index.to_string(); });
    }

    std::uniform_int_distribution<long> entry(1, 4);
    for (int i = 0; i < 10; ++i) {
        auto random_index = [&] {
            std::vector<long> e;
            const auto len = std::uniform_int_distribution<int>(1, 2)(rng);
            for (int k = 0; k < len; ++k) {
                e.push_back(entry(rng));
            }
            e.back() = std::max(e.back(), 2L);
            return MzvIndex(std::move(e));
        };
        const MzvIndex a = random_index();
        const MzvIndex b = random_index();
        const double lhs = eval.eval_mzv(a).value * eval.eval_mzv(b).value;
        close(lhs, eval.eval_combination(stuffle_expand(a, b)).value, "stuffle " + a.to_string() + b.to_string());
    }

    Engine engine;
    for (long a = -4; a <= 6; a += 2) {
        for (long b = -4; b <= 6; ++b) {
            for (long c = -4; c <= 6; ++c) {
                const IndexPoint p{a, b, c};
                if (!classify(p).is_regular() || p.all_positive()) {
                    continue;
                }
                s.guarded(p.to_string(), [&] {
                    const double right = eval.eval_point(engine, p, PivotStrategy::rightmost()).value;
                    const double left = eval.eval_point(engine, p, PivotStrategy::leftmost()).value;
                    const double closed = eval.eval_combination(closed_form_depth3(a, b, c)).value;
                    close(right, left, "pivot order " + p.to_string());
                    close(right, closed, "closed form " + p.to_string());
                });
            }
        }
    }
    return s.take();
}

} // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions &opts, std::ostream *log)
{
    std::mt19937 rng(opts.seed);
    std::vector<std::function<SuiteResult()>> suites = {
        [&] { return word_identities(rng); },
        [&] { return stuffle_laws(rng); },
        [] { return classifier(); },
        [] { return depth2_exact(); },
        [&] { return trace_and_bound(rng); },
        [&] { return numeric_checks(rng, opts.truncation); },
    };
    std::vector<SuiteResult> out;
    for (auto &suite : suites) {
        out.push_back(suite());
        const SuiteResult &r = out.back();
        if (log) {
            *log << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed
                 << " failed\n";
            for (const auto &f : r.failures) {
                *log << "     " << f << '\n';
            }
        }
    }
    return out;
}

} // namespace mzr
