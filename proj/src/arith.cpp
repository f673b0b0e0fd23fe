#include "eulerec/arith.hpp"

#include <algorithm>

#include "eulerec/series.hpp"

namespace eulerec {

namespace {

void require_positive(long long n, const char* who) {
    if (n <= 0) fail(errc::domain, std::string(who) + ": n must be >= 1");
}

}  // namespace

std::vector<long long> divisor_list(long long n) {
    require_positive(n, "divisor_list");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    require_positive(n, "factorize");
    std::vector<std::pair<long long, int>> factors;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

long long sigma_kind(long long n, SigmaKind kind) {
    require_positive(n, "sigma_kind");
    long long sum = 0;
    for (long long d : divisor_list(n)) {
        switch (kind) {
            case SigmaKind::all: sum += d; break;
            case SigmaKind::odd:
                if (d % 2 == 1) sum += d;
                break;
            case SigmaKind::even:
                if (d % 2 == 0) sum += d;
                break;
            case SigmaKind::alternating: sum += (d % 2 == 1 ? n / d : -(n / d)); break;
        }
    }
    return sum;
}

long long phi(long long n) {
    require_positive(n, "phi");
    long long result = n;
    for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
    return result;
}

long long tau(long long n) {
    require_positive(n, "tau");
    long long count = 1;
    for (auto [p, e] : factorize(n)) count *= e + 1;
    return count;
}

int liouville(long long n) {
    require_positive(n, "liouville");
    int big_omega = 0;
    for (auto [p, e] : factorize(n)) big_omega += e;
    return big_omega % 2 == 0 ? 1 : -1;
}

int mobius(long long n) {
    require_positive(n, "mobius");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

long long eta(long long n, int which) {
    require_positive(n, "eta");
    switch (which) {
        case 1:
            if (n % 2 == 0) return 0;
            return ((n - 1) / 2) % 2 == 0 ? 1 : -1;
        case 2: return n % 4 == 0 ? 0 : n;
        default: fail(errc::invalid_argument, "eta: selector must be 1 or 2");
    }
}

Int divisor_sum(const FunctionTable& f, long long n) {
    require_positive(n, "divisor_sum");
    Int sum = 0;
    for (long long d : divisor_list(n)) sum += f.at(d);
    return sum;
}

FunctionTable mobius_invert(const FunctionTable& g, std::string name) {
    long max_n = g.max_n();
    FunctionTable f{name.empty() ? g.name + "_psi" : std::move(name), {}};
    f.values.assign(static_cast<std::size_t>(max_n) + 1, Int(0));
    for (long long n = 1; n <= max_n; ++n) {
        Int acc = 0;
        for (long long d : divisor_list(n)) {
            int mu = mobius(n / d);
            if (mu == 1)
                acc += g.at(d);
            else if (mu == -1)
                acc -= g.at(d);
        }
        f.values[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return f;
}

FunctionTable r_table(long k, long max_n) {
    if (k < 1) fail(errc::invalid_argument, "r_table: k must be >= 1");
    if (max_n < 0) fail(errc::invalid_argument, "r_table: max_n must be >= 0");
    Series theta(max_n);
    {
        std::vector<Int> c(static_cast<std::size_t>(max_n) + 1, Int(0));
        c[0] = 1;
        for (long long j = 1; j * j <= max_n; ++j) c[static_cast<std::size_t>(j * j)] = 2;
        theta = Series(max_n, std::move(c));
    }
    Series power = Series::constant(1, max_n);
    for (long i = 0; i < k; ++i) power = power * theta;
    return FunctionTable{"r_" + std::to_string(k), power.coeffs()};
}

Int r_jacobi(long long n, int k) {
    require_positive(n, "r_jacobi");
    Int sum = 0;
    switch (k) {
        case 2:
            for (long long d : divisor_list(n)) sum += static_cast<long>(eta(d, 1));
            return 4 * sum;
        case 4:
            for (long long d : divisor_list(n)) sum += static_cast<long>(eta(d, 2));
            return 8 * sum;
        case 8:
            for (long long d : divisor_list(n)) {
                long dl = static_cast<long>(d);
                Int cube = Int(dl) * dl * dl;
                sum += ((n + d) % 2 == 0) ? cube : -cube;
            }
            return 16 * sum;
        default: fail(errc::invalid_argument, "r_jacobi: k must be 2, 4 or 8");
    }
}

FunctionTable sigma_table(long max_n, SigmaKind kind) {
    const char* name;
    switch (kind) {
        case SigmaKind::all: name = "sigma"; break;
        case SigmaKind::odd: name = "sigma_odd"; break;
        case SigmaKind::even: name = "sigma_even"; break;
        case SigmaKind::alternating: name = "sigma_alt"; break;
    }
    return tabulate(name, max_n, [kind](long n) { return n == 0 ? 0 : sigma_kind(n, kind); });
}

FunctionTable phi_table(long max_n) {
    return tabulate("phi", max_n, [](long n) { return n == 0 ? 0 : phi(n); });
}

FunctionTable tau_table(long max_n) {
    return tabulate("tau", max_n, [](long n) { return n == 0 ? 0 : tau(n); });
}

FunctionTable liouville_table(long max_n) {
    return tabulate("lambda", max_n, [](long n) { return n == 0 ? 0 : liouville(n); });
}

FunctionTable mobius_table(long max_n) {
    return tabulate("mu", max_n, [](long n) { return n == 0 ? 0 : mobius(n); });
}

}  // namespace eulerec
