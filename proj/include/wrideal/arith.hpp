#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wrideal {

using i64 = std::int64_t;
using i128 = __int128;

/// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
    i64 n = 1;
    std::vector<std::pair<i64, int>> factors;

    int omega() const { return static_cast<int>(factors.size()); }

    i64 tau() const {
        i64 t = 1;
        for (const auto& [p, e] : factors) t *= e + 1;
        return t;
    }

    bool squarefree() const {
        return std::all_of(factors.begin(), factors.end(),
                           [](const auto& pe) { return pe.second == 1; });
    }
};

/// Largest s with s*s <= n.
inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    auto s = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

// Trial division with a 2-3-5 wheel. All callers work with n well below
// 2^50, where this is instantaneous.
inline Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    out.n = n;
    auto strip = [&](i64 p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    i64 p = 7;
    int w = 0;
    while (p * p <= n) {
        strip(p);
        p += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) out.factors.emplace_back(n, 1);
    return out;
}

inline bool is_squarefree(i64 n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: n must be positive");
    if (n % 4 == 0 || n % 9 == 0 || n % 25 == 0) return false;
    return factorize(n).squarefree();
}

inline std::vector<i64> divisors_of(const Factorization& f) {
    std::vector<i64> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

inline std::vector<i64> divisors(i64 n) { return divisors_of(factorize(n)); }

/// Indicator table over 1..N; entry [D] is true iff D is squarefree.
inline std::vector<bool> squarefree_sieve(i64 N) {
    if (N < 1) throw std::invalid_argument("squarefree_sieve: N must be positive");
    std::vector<bool> sf(static_cast<std::size_t>(N) + 1, true);
    sf[0] = false;
    for (i64 d = 2; d * d <= N; ++d)
        for (i64 m = d * d; m <= N; m += d * d)
            sf[static_cast<std::size_t>(m)] = false;
    return sf;
}

/// Smallest-prime-factor sieve for bulk factorization in scans.
class SpfSieve {
public:
    explicit SpfSieve(i64 limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
        if (limit < 1) throw std::invalid_argument("SpfSieve: limit must be positive");
        for (i64 i = 2; i <= limit; ++i) {
            if (spf_[static_cast<std::size_t>(i)] == 0)
                for (i64 j = i; j <= limit; j += i)
                    if (spf_[static_cast<std::size_t>(j)] == 0)
                        spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        }
    }

    i64 limit() const { return static_cast<i64>(spf_.size()) - 1; }

    Factorization factorize(i64 n) const {
        if (n < 1 || n > limit())
            throw std::invalid_argument("SpfSieve::factorize: n out of range");
        Factorization out;
        out.n = n;
        while (n > 1) {
            const i64 p = spf_[static_cast<std::size_t>(n)];
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.factors.emplace_back(p, e);
        }
        return out;
    }

private:
    std::vector<std::int32_t> spf_;
};

}  // namespace wrideal
