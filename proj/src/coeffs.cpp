#include "fdzeta/coeffs.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "fdzeta/errors.hpp"

namespace fdz::coeffs {

namespace {

// All caches append-only under one lock; entries are immutable once written.
struct Cache {
    std::mutex mu;
    std::vector<std::vector<Integer>> stirling_rows;  // rows 0..n, row n holds l = 0..n
    std::vector<Rational> gregory;                    // index n >= 1, [0] unused
    std::vector<Rational> cauchy;                     // index n >= 0
    std::map<std::pair<long, long>, Rational> gregory_higher;
    std::vector<Rational> harmonic;  // H_0 = 0
    std::map<std::pair<long, long>, Rational> harmonic_gen;
    std::vector<Rational> bernoulli;
};

Cache& cache() {
    static Cache c;
    return c;
}

// Requires cache lock held.
void ensure_stirling_rows(Cache& c, long n) {
    if (c.stirling_rows.empty()) {
        c.stirling_rows.push_back({Integer(1)});
    }
    while (static_cast<long>(c.stirling_rows.size()) <= n) {
        long r = static_cast<long>(c.stirling_rows.size());
        const auto& prev = c.stirling_rows.back();
        std::vector<Integer> row(static_cast<size_t>(r) + 1);
        for (long l = 0; l <= r; ++l) {
            // S1(r, l) = S1(r-1, l-1) - (r-1) S1(r-1, l)
            Integer val = (l >= 1) ? prev[static_cast<size_t>(l - 1)] : Integer(0);
            if (l <= r - 1) {
                Integer t = prev[static_cast<size_t>(l)];
                t.mul_si(r - 1);
                val -= t;
            }
            row[static_cast<size_t>(l)] = std::move(val);
        }
        c.stirling_rows.push_back(std::move(row));
    }
}

// (1/n!) sum_{l=1}^n S1(n,l)/(l+k), shared by gregory/cauchy/higher paths.
// Requires stirling rows present.
Rational stirling_weight_sum(const Cache& c, long n, long k, bool absolute) {
    Rational acc = 0;
    const auto& row = c.stirling_rows[static_cast<size_t>(n)];
    for (long l = 1; l <= n; ++l) {
        Integer num = row[static_cast<size_t>(l)];
        if (absolute) num = num.abs();
        acc += Rational(num, Integer(l + k));
    }
    return acc / Rational(Integer::factorial(static_cast<unsigned long>(n)));
}

void ensure_gregory(Cache& c, long n) {
    ensure_stirling_rows(c, n);
    if (c.gregory.empty()) c.gregory.push_back(Rational(0));  // placeholder index 0
    while (static_cast<long>(c.gregory.size()) <= n) {
        long m = static_cast<long>(c.gregory.size());
        Rational rec;
        if (m == 1) {
            rec = Rational(1, 2);
        } else {
            // G_m = (-1)^{m-1}/(m+1) + sum_{k=1}^{m-1} (-1)^{m+1-k} G_k/(m+1-k)
            rec = Rational(((m - 1) % 2 == 0) ? 1 : -1, m + 1);
            for (long k = 1; k < m; ++k) {
                Rational t = c.gregory[static_cast<size_t>(k)] / Rational(m + 1 - k);
                if ((m + 1 - k) % 2 != 0) t = -t;
                rec += t;
            }
        }
        Rational direct = stirling_weight_sum(c, m, 1, false);
        if (rec != direct) {
            throw Error("gregory coefficient dual-path mismatch at n=" + std::to_string(m));
        }
        c.gregory.push_back(std::move(rec));
    }
}

void ensure_cauchy(Cache& c, long n) {
    ensure_gregory(c, n);
    if (c.cauchy.empty()) c.cauchy.push_back(Rational(1));
    while (static_cast<long>(c.cauchy.size()) <= n) {
        long m = static_cast<long>(c.cauchy.size());
        // C_m = C_{m-1} - |G_m|; must match the direct Stirling sum
        Rational val = c.cauchy[static_cast<size_t>(m - 1)] - c.gregory[static_cast<size_t>(m)].abs();
        Rational direct = stirling_weight_sum(c, m, 1, true);
        if (val != direct) {
            throw Error("cauchy number telescoping mismatch at n=" + std::to_string(m));
        }
        c.cauchy.push_back(std::move(val));
    }
}

void ensure_harmonic(Cache& c, long n) {
    if (c.harmonic.empty()) c.harmonic.push_back(Rational(0));
    while (static_cast<long>(c.harmonic.size()) <= n) {
        long m = static_cast<long>(c.harmonic.size());
        c.harmonic.push_back(c.harmonic.back() + Rational(1, m));
    }
}

}  // namespace

Integer stirling1(long n, long l) {
    if (n < 0 || l < 0) throw DomainError("stirling1 needs nonnegative indices");
    if (l > n) return Integer(0);
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    ensure_stirling_rows(c, n);
    return c.stirling_rows[static_cast<size_t>(n)][static_cast<size_t>(l)];
}

Rational gregory(long n) {
    if (n < 1) throw DomainError("gregory needs n >= 1");
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    ensure_gregory(c, n);
    return c.gregory[static_cast<size_t>(n)];
}

Rational cauchy2(long n) {
    if (n < 0) throw DomainError("cauchy2 needs n >= 0");
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    ensure_cauchy(c, n);
    return c.cauchy[static_cast<size_t>(n)];
}

Rational gregory_higher(long n, long k) {
    if (n < 1 || k < 1) throw DomainError("gregory_higher needs n, k >= 1");
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    auto it = c.gregory_higher.find({n, k});
    if (it != c.gregory_higher.end()) return it->second;
    ensure_stirling_rows(c, n);
    Rational val = stirling_weight_sum(c, n, k, false);
    c.gregory_higher.emplace(std::make_pair(n, k), val);
    return val;
}

Rational harmonic(long n) {
    if (n < 0) throw DomainError("harmonic needs n >= 0");
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    ensure_harmonic(c, n);
    return c.harmonic[static_cast<size_t>(n)];
}

Rational harmonic_gen(long n, long s) {
    if (n < 0 || s < 1) throw DomainError("harmonic_gen needs n >= 0, s >= 1");
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    auto it = c.harmonic_gen.find({n, s});
    if (it != c.harmonic_gen.end()) return it->second;
    Rational acc = 0;
    for (long j = 1; j <= n; ++j) {
        acc += Rational(Integer(1), Integer::pow(Integer(j), static_cast<unsigned long>(s)));
    }
    c.harmonic_gen.emplace(std::make_pair(n, s), acc);
    return acc;
}

Rational stirling_ratio(long n, long k) {
    if (n < 0 || k < 1) throw DomainError("stirling_ratio needs n >= 0, k >= 1");
    Rational val;
    {
        Cache& c = cache();
        std::scoped_lock lock(c.mu);
        ensure_stirling_rows(c, n + k);
        Integer num = c.stirling_rows[static_cast<size_t>(n + k)][static_cast<size_t>(k)].abs();
        val = Rational(num, Integer::factorial(static_cast<unsigned long>(n + k)));
    }
    if (k <= 3) {
        Rational closed;
        if (k == 1) {
            closed = Rational(1, n + 1);
        } else if (k == 2) {
            closed = harmonic(n + 1) / Rational(n + 2);
        } else {
            Rational h = harmonic(n + 2);
            closed = (h * h - harmonic_gen(n + 2, 2)) / Rational(2 * (n + 3));
        }
        if (closed != val) {
            throw Error("stirling_ratio closed form mismatch at n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
        }
    }
    return val;
}

Rational bell_modified(long m, std::span<const Rational> xs) {
    if (m < 0) throw DomainError("bell_modified needs m >= 0");
    if (static_cast<long>(xs.size()) < m) throw DomainError("bell_modified needs m arguments");
    std::vector<Rational> P;
    P.reserve(static_cast<size_t>(m) + 1);
    P.push_back(Rational(1));
    for (long mm = 1; mm <= m; ++mm) {
        Rational acc = 0;
        for (long j = 1; j <= mm; ++j) {
            acc += xs[static_cast<size_t>(j - 1)] * P[static_cast<size_t>(mm - j)];
        }
        P.push_back(acc / Rational(mm));
    }
    return P[static_cast<size_t>(m)];
}

Rational bernoulli(long n) {
    if (n < 0) throw DomainError("bernoulli needs n >= 0");
    Cache& c = cache();
    std::scoped_lock lock(c.mu);
    if (c.bernoulli.empty()) c.bernoulli.push_back(Rational(1));
    while (static_cast<long>(c.bernoulli.size()) <= n) {
        long m = static_cast<long>(c.bernoulli.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational acc = 0;
        for (long k = 0; k < m; ++k) {
            acc += Rational(Integer::binomial(static_cast<unsigned long>(m + 1),
                                              static_cast<unsigned long>(k))) *
                   c.bernoulli[static_cast<size_t>(k)];
        }
        c.bernoulli.push_back(-acc / Rational(m + 1));
    }
    return c.bernoulli[static_cast<size_t>(n)];
}

std::vector<Real> gregory_abs_table(long N, mpfr_prec_t prec) {
    if (N < 1) throw DomainError("gregory_abs_table needs N >= 1");
    std::vector<Real> g;
    g.reserve(static_cast<size_t>(N) + 1);
    g.emplace_back(0, prec);  // unused index 0
    g.emplace_back(Real(1, prec) / 2);
    std::vector<Real> inv;  // 1/j for j = 0..N+1
    inv.reserve(static_cast<size_t>(N) + 2);
    inv.emplace_back(0, prec);
    for (long j = 1; j <= N + 1; ++j) inv.push_back(Real(1, prec) / j);
    for (long n = 2; n <= N; ++n) {
        // |G_n| = 1/(n+1) - sum_{k=1}^{n-1} |G_k|/(n+1-k); all inner terms same sign
        Real acc(0, prec);
        for (long k = 1; k < n; ++k) {
            acc += g[static_cast<size_t>(k)] * inv[static_cast<size_t>(n + 1 - k)];
        }
        g.push_back(inv[static_cast<size_t>(n + 1)] - acc);
    }
    return g;
}

}  // namespace fdz::coeffs
