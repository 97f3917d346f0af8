#include <mzr/index.hpp>

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace mzr {

IndexPoint::IndexPoint(std::vector<long> entries) : m_entries(std::move(entries))
{
    if (m_entries.empty()) {
        throw std::invalid_argument("index point must have depth >= 1");
    }
}

bool IndexPoint::all_positive() const
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](long n) { return n > 0; });
}

std::string IndexPoint::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        if (i) {
            out += ", ";
        }
        out += std::to_string(m_entries[i]);
    }
    return out + ")";
}

std::ostream &operator<<(std::ostream &os, const IndexPoint &p)
{
    return os << p.to_string();
}

std::string RegularityVerdict::to_json() const
{
    nlohmann::ordered_json j;
    j["status"] = is_regular() ? "regular" : "singular";
    if (violated) {
        j["condition"] = std::string(1, violated->line);
        j["k"] = violated->k;
    }
    return j.dump();
}

RegularityVerdict classify(const IndexPoint &p)
{
    const auto &n = p.entries();
    const std::size_t r = n.size();
    auto singular = [](char line, std::size_t k) {
        return RegularityVerdict{Regularity::singular, SingularCondition{line, k}};
    };

    if (n[r - 1] == 1) {
        return singular('a', 1);
    }
    if (r >= 2) {
        const long s = n[r - 2] + n[r - 1];
        if (s == 2 || s == 1 || s == 0 || (s < 0 && s % 2 == 0)) {
            return singular('b', 2);
        }
    }
    long tail = r >= 2 ? n[r - 2] + n[r - 1] : 0;
    for (std::size_t k = 3; k <= r; ++k) {
        tail += n[r - k];
        if (tail <= static_cast<long>(k)) {
            return singular('c', k);
        }
    }
    return RegularityVerdict{};
}

bool is_admissible_mzv(const IndexPoint &p)
{
    const auto &n = p.entries();
    return std::all_of(n.begin(), n.end(), [](long x) { return x >= 1; }) && n.back() >= 2;
}

PositivePartStats positive_part_stats(const IndexPoint &p)
{
    PositivePartStats s;
    for (long x : p.entries()) {
        if (x > 0) {
            ++s.depth;
            s.weight += x;
        }
    }
    return s;
}

} // namespace mzr
