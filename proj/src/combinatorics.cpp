#include "eulerec/combinatorics.hpp"

#include <algorithm>
#include <numeric>

#include "eulerec/numbers.hpp"

namespace eulerec {

PartSet PartSet::squares() { return PartSet(Kind::squares, "squares"); }

PartSet PartSet::triangulars() { return PartSet(Kind::triangulars, "triangulars"); }

PartSet PartSet::explicit_list(std::vector<long long> parts) {
    PartSet set(Kind::explicit_list, "explicit");
    for (long long a : parts)
        if (a < 1) fail(errc::invalid_argument, "PartSet: parts must be >= 1");
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    set.elements_ = std::move(parts);
    return set;
}

bool PartSet::contains(long long a) const {
    if (a < 1) return false;
    switch (kind_) {
        case Kind::squares: return delta_s(a) == 1;
        case Kind::triangulars: return delta_t(a) == 1;
        case Kind::explicit_list:
            return std::binary_search(elements_.begin(), elements_.end(), a);
    }
    return false;
}

std::vector<long long> PartSet::members_upto(long long n) const {
    std::vector<long long> members;
    switch (kind_) {
        case Kind::squares:
            for (long long j = 1; j * j <= n; ++j) members.push_back(j * j);
            break;
        case Kind::triangulars:
            for (long long j = 1; j * (j + 1) / 2 <= n; ++j) members.push_back(j * (j + 1) / 2);
            break;
        case Kind::explicit_list:
            for (long long a : elements_) {
                if (a > n) break;
                members.push_back(a);
            }
            break;
    }
    return members;
}

PartitionTables partition_tables(long max_n) {
    if (max_n < 0) fail(errc::invalid_argument, "partition_tables: max_n must be >= 0");
    auto n_slots = static_cast<std::size_t>(max_n) + 1;

    std::vector<Int> p(n_slots, Int(0)), q(n_slots, Int(0)), qq(n_slots, Int(0));
    p[0] = q[0] = qq[0] = 1;
    for (long part = 1; part <= max_n; ++part) {
        // unbounded multiplicity: ascending sweep
        for (long n = part; n <= max_n; ++n) p[n] += p[n - part];
        // at most once per part: descending sweep
        for (long n = max_n; n >= part; --n) {
            q[n] += q[n - part];
            if (part % 2 == 1) qq[n] += qq[n - part];
        }
    }
    return PartitionTables{FunctionTable{"p", std::move(p)}, FunctionTable{"q", std::move(q)},
                           FunctionTable{"qq", std::move(qq)}};
}

namespace {

constexpr long kPartitionEnumGuard = 60;

struct PartitionCounter {
    const PartitionConstraint& constraint;
    long long count = 0;

    // Parts are generated non-increasing; `max_part` bounds the next choice.
    void walk(long remaining, long max_part, long long gcd_so_far, long parts_so_far) {
        if (remaining == 0) {
            if (constraint.part_count && *constraint.part_count != parts_so_far) return;
            if (constraint.coprime && parts_so_far > 0 && gcd_so_far != 1) return;
            ++count;
            return;
        }
        for (long part = std::min<long>(remaining, max_part); part >= 1; --part) {
            if (constraint.odd_parts && part % 2 == 0) continue;
            walk(remaining - part, constraint.distinct ? part - 1 : part,
                 std::gcd(gcd_so_far, static_cast<long long>(part)), parts_so_far + 1);
        }
    }
};

}  // namespace

long long enumerate_partitions_oracle(long n, const PartitionConstraint& constraint) {
    if (n < 0) fail(errc::invalid_argument, "enumerate_partitions_oracle: n must be >= 0");
    if (n > kPartitionEnumGuard)
        fail(errc::guard, "enumerate_partitions_oracle: n exceeds the enumeration guard of " +
                              std::to_string(kPartitionEnumGuard));
    PartitionCounter counter{constraint};
    counter.walk(n, n, 0, 0);
    return counter.count;
}

Int compositions_closed(long long n) {
    if (n <= 0) fail(errc::domain, "compositions_closed: n must be >= 1");
    Int result;
    mpz_ui_pow_ui(result.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    return result;
}

Int compositions_closed(long long n, long long r) {
    if (n <= 0) fail(errc::domain, "compositions_closed: n must be >= 1");
    if (r <= 0) fail(errc::domain, "compositions_closed: r must be >= 1");
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n - 1),
                 static_cast<unsigned long>(r - 1));
    return result;
}

FunctionTable relprime_table(const FunctionTable& g) { return mobius_invert(g); }

FunctionTable comp_with_parts(const PartSet& parts, long max_n, std::string name) {
    if (max_n < 0) fail(errc::invalid_argument, "comp_with_parts: max_n must be >= 0");
    auto members = parts.members_upto(max_n);
    std::vector<Int> c(static_cast<std::size_t>(max_n) + 1, Int(0));
    c[0] = 1;
    for (long n = 1; n <= max_n; ++n)
        for (long long a : members) {
            if (a > n) break;
            c[n] += c[n - a];
        }
    return FunctionTable{name.empty() ? "c_" + parts.label() : std::move(name), std::move(c)};
}

namespace {

constexpr std::size_t kSubsetGuard = 22;

std::vector<long long> ground_elements(long long n, SubsetGround over) {
    if (over == SubsetGround::divisor_set) return divisor_list(n);
    std::vector<long long> elements(static_cast<std::size_t>(n));
    std::iota(elements.begin(), elements.end(), 1);
    return elements;
}

}  // namespace

long long subset_gcd_oracle(long long n, std::optional<long> r, SubsetGround over) {
    if (n <= 0) fail(errc::domain, "subset_gcd_oracle: n must be >= 1");
    auto elements = ground_elements(n, over);
    if (elements.size() > kSubsetGuard)
        fail(errc::guard, "subset_gcd_oracle: ground set of size " +
                              std::to_string(elements.size()) + " exceeds the guard of " +
                              std::to_string(kSubsetGuard));
    std::size_t size = elements.size();
    // gcds[mask] = gcd of the selected elements, reusing the mask without its
    // lowest set bit (gcd(0, x) = x handles singletons).
    std::vector<long long> gcds(std::size_t{1} << size, 0);
    long long count = 0;
    for (std::size_t mask = 1; mask < gcds.size(); ++mask) {
        auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
        gcds[mask] = std::gcd(gcds[mask & (mask - 1)], elements[low]);
        if (r && *r != __builtin_popcountll(mask)) continue;
        if (std::gcd(gcds[mask], n) == 1) ++count;
    }
    return count;
}

FunctionTable nathanson_table(long max_n, std::optional<long> r, SubsetGround over) {
    if (max_n < 1) fail(errc::invalid_argument, "nathanson_table: max_n must be >= 1");
    if (r && *r < 1) fail(errc::domain, "nathanson_table: r must be >= 1");
    bool by_divisors = over == SubsetGround::divisor_set;
    std::string name = by_divisors ? "Phi_tau" : "Phi";
    if (r) name += "_r";

    FunctionTable rhs = tabulate("rhs", max_n, [&](long n) -> Int {
        if (n == 0) return 0;
        long long ground = by_divisors ? tau(n) : n;
        Int value;
        if (r) {
            mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(ground),
                         static_cast<unsigned long>(*r));
        } else {
            mpz_ui_pow_ui(value.get_mpz_t(), 2, static_cast<unsigned long>(ground));
            value -= 1;
        }
        return value;
    });
    return mobius_invert(rhs, name);
}

}  // namespace eulerec
