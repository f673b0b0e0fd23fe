#pragma once

#include <string_view>
#include <vector>

#include "eulerec/arith.hpp"
#include "eulerec/identities.hpp"

namespace eulerec {

/// One published sequence name. `first_n` is the first index with a defined
/// value under the sequence's convention (0 for partition/composition-style
/// counts and indicator sequences, 1 for divisor-sum-style functions).
struct SequenceMeta {
    std::string_view name;
    long first_n;
    bool needs_k = false;
    bool needs_r = false;
    bool has_solver = false;  // a pure-recurrence path exists
};

const std::vector<SequenceMeta>& sequence_catalog();
const SequenceMeta* sequence_lookup(std::string_view name);

/// Direct tabulation from definitions: partition/composition DP, divisor
/// sums, theta-series convolution, subset-count inversion. The result covers
/// indices 0..max_n; entries below first_n are 0.
FunctionTable sequence_oracle(std::string_view name, long max_n, long k = 0, long r = 0);

/// The Euler-type recurrence path. Only p, q, sigma and r_k have one.
SolveResult sequence_recurrence(std::string_view name, long max_n, long k = 0);

}  // namespace eulerec
