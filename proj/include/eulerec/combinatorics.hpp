#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerec/arith.hpp"
#include "eulerec/types.hpp"

namespace eulerec {

/// A (possibly infinite, rule-defined) set of allowed composition parts.
/// Every member is >= 1; membership for the rule kinds is O(1) via the
/// square/triangular indicators.
class PartSet {
public:
    static PartSet squares();
    static PartSet triangulars();
    static PartSet explicit_list(std::vector<long long> parts);

    bool contains(long long a) const;
    /// Members in [1, n], ascending.
    std::vector<long long> members_upto(long long n) const;
    const std::string& label() const { return label_; }

private:
    enum class Kind { squares, triangulars, explicit_list };
    PartSet(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

    Kind kind_;
    std::string label_;
    std::vector<long long> elements_;  // explicit_list only
};

/// Independent, composable partition filters.
struct PartitionConstraint {
    bool distinct = false;
    bool odd_parts = false;
    bool coprime = false;  // gcd of all parts is 1 (a single part a has gcd a)
    std::optional<long> part_count;
};

struct PartitionTables {
    FunctionTable p;   // all partitions
    FunctionTable q;   // distinct parts
    FunctionTable qq;  // distinct odd parts
};

/// p, q, qq on 0..max_n by bounded-part dynamic programming; all three start at 1.
PartitionTables partition_tables(long max_n);

/// Exact count by exhaustive recursive generation, applying the constraint to
/// each complete partition. Guarded at n <= 60.
long long enumerate_partitions_oracle(long n, const PartitionConstraint& constraint);

/// Number of compositions of n: 2^(n-1). Requires n >= 1.
Int compositions_closed(long long n);
/// Number of compositions of n with exactly r parts: binomial(n-1, r-1).
Int compositions_closed(long long n, long long r);

/// Strip a divisor-sum table down to its relatively prime core: the inverse f
/// of g(n) = sum_{d|n} f(d), with name bookkeeping.
FunctionTable relprime_table(const FunctionTable& g);

/// c_A(n) for 0..max_n with parts from `parts`: c_A(0) = 1 and
/// c_A(n) = sum_{a in A, a <= n} c_A(n-a). Orderedness is inherent in the
/// recurrence.
FunctionTable comp_with_parts(const PartSet& parts, long max_n, std::string name = "");

enum class SubsetGround {
    ground_set,   // subsets of {1..n}
    divisor_set,  // subsets of the positive divisors of n
};

/// Count of nonempty subsets (or subsets of cardinality r) of the ground set
/// whose gcd is relatively prime to n. Exhaustive; guarded at set size <= 22.
long long subset_gcd_oracle(long long n, std::optional<long> r, SubsetGround over);

/// The subset-count tables obtained by inverting their defining divisor sums:
/// ground-set inverts 2^n - 1 (or binomial(n, r)); divisor-set inverts
/// 2^tau(n) - 1 (or binomial(tau(n), r)).
FunctionTable nathanson_table(long max_n, std::optional<long> r, SubsetGround over);

}  // namespace eulerec
