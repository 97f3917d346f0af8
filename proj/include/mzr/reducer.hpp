#pragma once

// Reduction of multiple zeta values at regular integer points to exact
// rational combinations of admissible MZVs.
//
// At a point with a non-positive entry n_j = -m the engine applies
//
//   zeta_r(..., -m, ...) =
//       - [j>1] 1/(m+1) zeta_{r-1}(..., n_{j-1}-m-1, n_{j+1}, ...)
//       + [j<r] 1/(m+1) zeta_{r-1}(..., n_{j-1}, n_{j+1}-m-1, ...)
//       + [j>1] sum_k C(m,k) zeta(-k) zeta_{r-1}(..., n_{j-1}-m+k, n_{j+1}, ...)
//       - [j<r] sum_k C(m,k) zeta(-k) zeta_{r-1}(..., n_{j-1}, n_{j+1}-m+k, ...)
//       + [j=1<r] zeta(-m) zeta_{r-1}(n_2, ..., n_r)
//       - [j<r] zeta_{r-1}(..., n_{j-1}, n_{j+1}-m, ...)
//
// and recurses on the depth r-1 children until every remaining point is an
// admissible MZV or a depth-1 value zeta(n), n <= 0.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <mzr/index.hpp>
#include <mzr/mzv.hpp>
#include <mzr/rational.hpp>

namespace mzr {

// reduce() or a closed form was asked for a point on the singular set.
class SingularInput : public std::runtime_error {
public:
    SingularInput(IndexPoint point, RegularityVerdict verdict);

    const IndexPoint &point() const { return m_point; }
    const RegularityVerdict &verdict() const { return m_verdict; }

private:
    IndexPoint m_point;
    RegularityVerdict m_verdict;
};

// A child with a nonzero multiplier landed on the singular set.
class RegularityViolation : public std::runtime_error {
public:
    // path: the chain of expanded points from the top-level input down to parent.
    RegularityViolation(std::vector<IndexPoint> path, IndexPoint child, Rational multiplier);

    const std::vector<IndexPoint> &path() const { return m_path; }
    const IndexPoint &child() const { return m_child; }
    const Rational &multiplier() const { return m_multiplier; }

    // Human-readable dump of the offending chain.
    std::string describe() const;

private:
    std::vector<IndexPoint> m_path;
    IndexPoint m_child;
    Rational m_multiplier;
};

enum class PivotRule { rightmost, leftmost, explicit_position };

struct PivotStrategy {
    PivotRule rule = PivotRule::rightmost;
    // 1-based pivot for explicit_position, applied to the top-level point only;
    // children are reduced with the rightmost rule.
    std::size_t position = 0;

    static PivotStrategy rightmost() { return {}; }
    static PivotStrategy leftmost() { return {PivotRule::leftmost, 0}; }
    static PivotStrategy at(std::size_t j) { return {PivotRule::explicit_position, j}; }

    friend bool operator==(const PivotStrategy &, const PivotStrategy &) = default;
    friend auto operator<=>(const PivotStrategy &, const PivotStrategy &) = default;
};

// One expansion. pivot == 0 marks a terminal point whose value is `terminal`.
struct TraceStep {
    IndexPoint point;
    std::size_t pivot = 0;
    std::vector<std::pair<IndexPoint, Rational>> children;
    MzvCombination terminal;
};

// Steps in post-order: every child appears before the step that uses it.
struct ReductionTrace {
    std::vector<TraceStep> steps;

    // Recomputes the value of the last step from the recorded multipliers.
    MzvCombination replay() const;
    std::string to_json() const;
};

struct Reduction {
    MzvCombination combination;
    ReductionTrace trace;
};

// Memoizing reduction engine. Not thread-safe: confine an Engine to one
// thread (or give each thread its own).
class Engine {
public:
    // Throws SingularInput when p is not regular, RegularityViolation when an
    // intermediate child with nonzero multiplier is singular, and
    // std::invalid_argument for an explicit pivot that is out of range or
    // points at a positive entry.
    Reduction reduce(const IndexPoint &p, PivotStrategy strategy = {});

    // Same value as reduce(p, strategy).combination without assembling a trace.
    const MzvCombination &value(const IndexPoint &p, PivotStrategy strategy = {});

    std::size_t memo_size() const { return m_memo.size(); }
    void clear() { m_memo.clear(); }

private:
    struct Entry {
        MzvCombination value;
        TraceStep step;
    };
    using Key = std::pair<std::vector<long>, PivotStrategy>;

    const Entry &expand(const IndexPoint &p, PivotStrategy strategy, std::vector<IndexPoint> &path);
    void collect(const IndexPoint &p, PivotStrategy strategy, std::map<Key, bool> &seen, ReductionTrace &out) const;

    std::map<Key, Entry> m_memo;
};

// The multipliers of one application of the recurrence at pivot j (1-based),
// with identical children merged and zero multipliers removed.
// Requires depth >= 2 and n_j <= 0.
std::vector<std::pair<IndexPoint, Rational>> recurrence_children(const IndexPoint &p, std::size_t j);

// Picks the pivot for a point with at least one non-positive entry.
std::size_t choose_pivot(const IndexPoint &p, PivotStrategy strategy);

// Closed forms for depth 2 and 3, organized by the sign pattern of the entries.
// Throw SingularInput on singular points and RegularityViolation if a term with
// nonzero coefficient needs a singular value.
MzvCombination closed_form_depth2(long n1, long n2);
MzvCombination closed_form_depth3(long n1, long n2, long n3);

// Every index in c has depth <= dp(p+) and weight <= wt(p+).
bool bound_check(const IndexPoint &p, const MzvCombination &c);

// zeta(a) * zeta(b) as the image of the harmonic product of the two words.
// Throws std::invalid_argument if either index is not admissible.
MzvCombination stuffle_expand(const MzvIndex &a, const MzvIndex &b);

} // namespace mzr
