#pragma once

#include <optional>
#include <string>
#include <vector>

namespace springer {

// Simple Lie types.  Classical families carry a rank; the five exceptional
// families do not.
enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

bool is_classical(Family f);
std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& s);

/* An integer partition, stored nonincreasing.  Empty is allowed and
 * represents the partition of 0.  Constructors sort and validate.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const { return sum_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return static_cast<int>(parts_.size()); }

    // multiplicity of d as a part
    int multiplicity(int d) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

struct PartitionStats {
    int gcd_of_parts;            // c
    int distinct_odd_parts;      // a
    int distinct_even_parts;     // b
    bool all_odd_multiplicity_one;
};

// Validity predicate for the partition labeling a nilpotent orbit of the
// given classical family:
//   A: any partition; B, D: every even part has even multiplicity;
//   C: every odd part has even multiplicity.
bool is_valid_for_type(const Partition& p, Family t);

// All parts even with even multiplicity (type D; these label two orbits).
bool is_very_even(const Partition& p);

// All valid partitions for the rank-n group of family t, in descending
// lexicographic order.  Totals: A -> n+1, B -> 2n+1, C and D -> 2n.
std::vector<Partition> enumerate_partitions(int rank, Family t);

// All partitions of `total` in descending lexicographic order.
std::vector<Partition> all_partitions(int total);

PartitionStats partition_stats(const Partition& p);

// Witness d with d(d+1)/2 == m, if any.  Exact integer arithmetic.
std::optional<long long> triangular_witness(long long m);
// Witness r with r*r == m, if any.
std::optional<long long> square_witness(long long m);

} // namespace springer
