#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "eulerec/arith.hpp"
#include "eulerec/types.hpp"

namespace eulerec {

/// Stable catalog keys, one per verified identity. Product identities are
/// series-level (coefficientwise) checks; everything else is a per-n residual.
enum class IdentityKey {
    pent_product,
    gauss_tri,
    gauss_sq,
    jacobi_triple,
    eq3_p,
    eq4_q,
    eq5_sigma,
    thm1_generic,
    thm_phi,
    thm_tau,
    thm_lambda,
    thm_mobius,
    thm_ppsi,
    thm_qpsi,
    thm_cpsi,
    thm_cpsi_r,
    thm_r2,
    thm_r4,
    thm_r8,
    thm_Phi,
    thm_Phi_r,
    thm_Phitau,
    thm_Phitau_r,
    thm2a,
    thm2b,
    thm3a,
    thm3b,
    thm3c,
    thm4a,
    thm4b,
    thm5a,
    thm5b,
    thm5c,
    thm_rk,
    cor_rk_cong,
};

/// A catalog key plus its parameters. `k` matters for thm-rk / cor-rk-cong,
/// `r` for the *-r entries; `literal` selects the uncorrected printed form of
/// thm4b (kept around to demonstrate the erratum).
struct IdentityId {
    IdentityKey key;
    long k = 0;
    long r = 0;
    bool literal = false;
};

struct IdentityFailure {
    long n;
    Int lhs;
    Int rhs;
};

struct IdentityReport {
    IdentityId id;
    long n_lo = 0;
    long n_hi = -1;
    long checked = 0;
    std::vector<IdentityFailure> failures;
    std::chrono::duration<double> elapsed{0};

    bool passed() const { return failures.empty(); }
};

struct IdentityMeta {
    IdentityKey key;
    std::string_view name;  // stable public identifier, e.g. "eq3-p"
    long domain_start;      // first n on which the identity is stated
    long verify_cap;        // documented oracle-cost ceiling for bulk verification
    bool needs_k = false;
    bool needs_r = false;
    long default_k = 0;
    long default_r = 0;
    bool is_product = false;
    bool has_literal = false;
};

const std::vector<IdentityMeta>& identity_catalog();
const IdentityMeta& identity_meta(IdentityKey key);
const IdentityMeta* identity_lookup(std::string_view name);

/// The pentagonal convolution sum_{k=1}^{n} g(k) omega(n-k).
Int theorem1_lhs(const FunctionTable& g, long n);

/// The cumulative-pentagonal side sum_{m=1}^{n} f(m) omega_m(n-m), where
/// omega_m is the cumulative sum omega(j) + omega(j-m) + omega(j-2m) + ...
Int theorem1_rhs(const FunctionTable& f, long n);

/// LHS - RHS of the identity at n. 0 iff the identity holds there.
Int residual(const IdentityId& id, long n);

/// Evaluate the residual at every n in [n_lo, n_hi] (clamped below to the
/// identity's domain start), collecting all failures.
IdentityReport verify_range(const IdentityId& id, long n_lo, long n_hi);

/// Coefficientwise comparison of both sides of a product identity, expanded
/// to the given order by independent code paths.
IdentityReport product_identity_check(IdentityKey key, long order);

enum class SolveTarget { p, q, sigma, r_k };

struct SolveResult {
    FunctionTable table;
    unsigned long long terms = 0;  // recurrence terms touched, for cost reporting
};

/// Compute a sequence using only its recurrence plus the omega/delta seed
/// values - no divisor sums, no partition DP. The r_k recurrence divides by n
/// at each step; a non-exact division raises errc::inexact.
SolveResult solve_via_recurrence(SolveTarget target, long max_n, long k = 0);

}  // namespace eulerec
