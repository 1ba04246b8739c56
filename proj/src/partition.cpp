#include "springer/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace springer {

bool is_classical(Family f)
{
    return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& s)
{
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "E6") return Family::E6;
    if (s == "E7") return Family::E7;
    if (s == "E8") return Family::E8;
    if (s == "F4") return Family::F4;
    if (s == "G2") return Family::G2;
    return std::nullopt;
}

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.rbegin(), parts_.rend());
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int d) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), d));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); i++) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool is_valid_for_type(const Partition& p, Family t)
{
    switch (t) {
    case Family::A:
        return true;
    case Family::B:
    case Family::D:
        for (int d : p.parts())
            if (d % 2 == 0 && p.multiplicity(d) % 2 != 0)
                return false;
        return true;
    case Family::C:
        for (int d : p.parts())
            if (d % 2 == 1 && p.multiplicity(d) % 2 != 0)
                return false;
        return true;
    default:
        throw std::invalid_argument("is_valid_for_type: classical family required");
    }
}

bool is_very_even(const Partition& p)
{
    for (int d : p.parts())
        if (d % 2 == 1 || p.multiplicity(d) % 2 != 0)
            return false;
    return true;
}

std::vector<Partition> all_partitions(int total)
{
    if (total < 0)
        throw std::invalid_argument("all_partitions: negative total");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lexicographic order: largest first part first
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; p--) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, total == 0 ? 1 : total);
    return out;
}

std::vector<Partition> enumerate_partitions(int rank, Family t)
{
    if (rank < 0)
        throw std::invalid_argument("enumerate_partitions: negative rank");
    int total;
    switch (t) {
    case Family::A: total = rank + 1; break;
    case Family::B: total = 2 * rank + 1; break;
    case Family::C:
    case Family::D: total = 2 * rank; break;
    default:
        throw std::invalid_argument("enumerate_partitions: classical family required");
    }
    std::vector<Partition> out;
    for (auto& p : all_partitions(total))
        if (is_valid_for_type(p, t))
            out.push_back(std::move(p));
    return out;
}

PartitionStats partition_stats(const Partition& p)
{
    if (p.empty())
        throw std::invalid_argument("partition_stats: empty partition");
    PartitionStats st{0, 0, 0, true};
    int prev = -1;
    for (int d : p.parts()) {
        st.gcd_of_parts = std::gcd(st.gcd_of_parts, d);
        if (d != prev) {
            if (d % 2 == 1)
                st.distinct_odd_parts++;
            else
                st.distinct_even_parts++;
            prev = d;
        }
        if (d % 2 == 1 && p.multiplicity(d) != 1)
            st.all_odd_multiplicity_one = false;
    }
    return st;
}

std::optional<long long> triangular_witness(long long m)
{
    if (m < 0)
        return std::nullopt;
    // d(d+1)/2 = m  =>  d ~ sqrt(2m); search near the floating estimate and
    // confirm with exact arithmetic.
    long long d = static_cast<long long>(std::sqrt(2.0L * static_cast<long double>(m)));
    for (long long c = std::max(0LL, d - 2); c <= d + 2; c++)
        if (c * (c + 1) / 2 == m)
            return c;
    return std::nullopt;
}

std::optional<long long> square_witness(long long m)
{
    if (m < 0)
        return std::nullopt;
    long long r = static_cast<long long>(std::sqrt(static_cast<long double>(m)));
    for (long long c = std::max(0LL, r - 2); c <= r + 2; c++)
        if (c * c == m)
            return c;
    return std::nullopt;
}

} // namespace springer
