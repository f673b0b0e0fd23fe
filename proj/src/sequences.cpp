#include "eulerec/sequences.hpp"

#include "eulerec/combinatorics.hpp"
#include "eulerec/numbers.hpp"

namespace eulerec {

namespace {

// clang-format off
const std::vector<SequenceMeta> kSequences = {
    {"p",          0, false, false, true},
    {"q",          0, false, false, true},
    {"qq",         0},
    {"p_psi",      1},
    {"q_psi",      1},
    {"c",          1},
    {"c_r",        1, false, true},
    {"c_psi",      1},
    {"c_psi_r",    1, false, true},
    {"s",          0},
    {"t",          0},
    {"sigma",      1, false, false, true},
    {"sigma_odd",  1},
    {"sigma_even", 1},
    {"sigma_alt",  1},
    {"phi",        1},
    {"tau",        1},
    {"lambda",     1},
    {"mu",         1},
    {"omega",      0},
    {"delta_s",    0},
    {"delta_t",    0},
    {"r_k",        0, true, false, true},
    {"Phi",        1},
    {"Phi_r",      1, false, true},
    {"Phi_tau",    1},
    {"Phi_tau_r",  1, false, true},
};
// clang-format on

FunctionTable composition_count_table(long max_n, long r) {
    return tabulate("c", max_n, [r](long n) -> Int {
        if (n == 0) return 0;
        return r > 0 ? compositions_closed(n, r) : compositions_closed(n);
    });
}

FunctionTable nathanson_or_empty(long max_n, std::optional<long> r, SubsetGround over) {
    if (max_n < 1) return FunctionTable{"Phi", {Int(0)}};
    return nathanson_table(max_n, r, over);
}

}  // namespace

const std::vector<SequenceMeta>& sequence_catalog() { return kSequences; }

const SequenceMeta* sequence_lookup(std::string_view name) {
    for (const auto& meta : kSequences)
        if (meta.name == name) return &meta;
    return nullptr;
}

FunctionTable sequence_oracle(std::string_view name, long max_n, long k, long r) {
    const SequenceMeta* meta = sequence_lookup(name);
    if (!meta) fail(errc::unknown_name, "sequence_oracle: no sequence named " + std::string(name));
    if (max_n < 0) fail(errc::invalid_argument, "sequence_oracle: max_n must be >= 0");
    if (meta->needs_k && k < 1)
        fail(errc::invalid_argument, std::string(name) + " requires k >= 1");
    if (meta->needs_r && r < 1)
        fail(errc::invalid_argument, std::string(name) + " requires r >= 1");

    auto finish = [&](FunctionTable t) {
        t.name = std::string(name);
        return t;
    };

    if (name == "p") return finish(std::move(partition_tables(max_n).p));
    if (name == "q") return finish(std::move(partition_tables(max_n).q));
    if (name == "qq") return finish(std::move(partition_tables(max_n).qq));
    if (name == "p_psi") return finish(relprime_table(partition_tables(max_n).p));
    if (name == "q_psi") return finish(relprime_table(partition_tables(max_n).q));
    if (name == "c") return finish(composition_count_table(max_n, 0));
    if (name == "c_r") return finish(composition_count_table(max_n, r));
    if (name == "c_psi") return finish(relprime_table(composition_count_table(max_n, 0)));
    if (name == "c_psi_r") return finish(relprime_table(composition_count_table(max_n, r)));
    if (name == "s") return finish(comp_with_parts(PartSet::squares(), max_n, "s"));
    if (name == "t") return finish(comp_with_parts(PartSet::triangulars(), max_n, "t"));
    if (name == "sigma") return finish(sigma_table(max_n, SigmaKind::all));
    if (name == "sigma_odd") return finish(sigma_table(max_n, SigmaKind::odd));
    if (name == "sigma_even") return finish(sigma_table(max_n, SigmaKind::even));
    if (name == "sigma_alt") return finish(sigma_table(max_n, SigmaKind::alternating));
    if (name == "phi") return finish(phi_table(max_n));
    if (name == "tau") return finish(tau_table(max_n));
    if (name == "lambda") return finish(liouville_table(max_n));
    if (name == "mu") return finish(mobius_table(max_n));
    if (name == "omega") return finish(tabulate("omega", max_n, [](long n) { return omega(n); }));
    if (name == "delta_s")
        return finish(tabulate("delta_s", max_n, [](long n) { return delta_s(n); }));
    if (name == "delta_t")
        return finish(tabulate("delta_t", max_n, [](long n) { return delta_t(n); }));
    if (name == "r_k") return finish(r_table(k, max_n));
    if (name == "Phi")
        return finish(nathanson_or_empty(max_n, std::nullopt, SubsetGround::ground_set));
    if (name == "Phi_r") return finish(nathanson_or_empty(max_n, r, SubsetGround::ground_set));
    if (name == "Phi_tau")
        return finish(nathanson_or_empty(max_n, std::nullopt, SubsetGround::divisor_set));
    if (name == "Phi_tau_r") return finish(nathanson_or_empty(max_n, r, SubsetGround::divisor_set));

    fail(errc::unknown_name, "sequence_oracle: no sequence named " + std::string(name));
}

SolveResult sequence_recurrence(std::string_view name, long max_n, long k) {
    const SequenceMeta* meta = sequence_lookup(name);
    if (!meta)
        fail(errc::unknown_name, "sequence_recurrence: no sequence named " + std::string(name));
    if (!meta->has_solver)
        fail(errc::invalid_argument, std::string(name) + " has no recurrence path");

    SolveResult result;
    if (name == "p")
        result = solve_via_recurrence(SolveTarget::p, max_n);
    else if (name == "q")
        result = solve_via_recurrence(SolveTarget::q, max_n);
    else if (name == "sigma")
        result = solve_via_recurrence(SolveTarget::sigma, max_n);
    else
        result = solve_via_recurrence(SolveTarget::r_k, max_n, k);
    result.table.name = std::string(name);
    return result;
}

}  // namespace eulerec
