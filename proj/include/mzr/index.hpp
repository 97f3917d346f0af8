#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mzr {

// An integer argument tuple (n_1, ..., n_r), r >= 1.
class IndexPoint {
public:
    // Throws std::invalid_argument on an empty sequence.
    explicit IndexPoint(std::vector<long> entries);
    IndexPoint(std::initializer_list<long> entries) : IndexPoint(std::vector<long>(entries)) {}

    std::size_t depth() const { return m_entries.size(); }
    const std::vector<long> &entries() const { return m_entries; }
    // 1-based access, matching the usual (n_1, ..., n_r) numbering.
    long at(std::size_t i) const { return m_entries.at(i - 1); }

    bool all_positive() const;

    friend bool operator==(const IndexPoint &, const IndexPoint &) = default;
    friend auto operator<=>(const IndexPoint &, const IndexPoint &) = default;

    // "(2, -3)"
    std::string to_string() const;

private:
    std::vector<long> m_entries;
};

std::ostream &operator<<(std::ostream &os, const IndexPoint &p);

enum class Regularity { regular, singular };

// Which line of the singular-set description failed first:
//   a: n_r = 1
//   b: n_{r-1} + n_r in {2, 1, 0, -2, -4, ...}
//   c: n_{r-k+1} + ... + n_r <= k for some k >= 3
struct SingularCondition {
    char line;      // 'a', 'b' or 'c'
    std::size_t k;  // number of trailing entries involved (1 for a, 2 for b)

    friend bool operator==(const SingularCondition &, const SingularCondition &) = default;
};

struct RegularityVerdict {
    Regularity status = Regularity::regular;
    std::optional<SingularCondition> violated;

    bool is_regular() const { return status == Regularity::regular; }

    // {"status":"regular"} or {"status":"singular","condition":"b","k":2}
    std::string to_json() const;

    friend bool operator==(const RegularityVerdict &, const RegularityVerdict &) = default;
};

// Scans (a), then (b), then (c) with increasing k; reports the first violation.
RegularityVerdict classify(const IndexPoint &p);

// Every entry >= 1 and the last entry >= 2.
bool is_admissible_mzv(const IndexPoint &p);

struct PositivePartStats {
    std::size_t depth = 0;
    long weight = 0;

    friend bool operator==(const PositivePartStats &, const PositivePartStats &) = default;
};

// Count and sum of the strictly positive entries.
PositivePartStats positive_part_stats(const IndexPoint &p);

} // namespace mzr
