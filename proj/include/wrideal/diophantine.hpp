#pragma once

#include <compare>
#include <numeric>
#include <optional>
#include <set>

#include "wrideal/arith.hpp"

namespace wrideal {

/// Similarity class token of a planar integral well-rounded lattice:
/// p^2 + D r^2 = q^2, gcd(p,q) = 1, 2p <= q, D squarefree.
struct PqClass {
    i64 p = 0;
    i64 q = 1;
    i64 r = 1;
    i64 D = 1;

    auto operator<=>(const PqClass&) const = default;

    bool valid() const {
        return p >= 0 && q > 0 && r > 0 && D > 0 && p * p + D * r * r == q * q &&
               std::gcd(p, q) == 1 && 2 * p <= q && is_squarefree(D);
    }
};

struct CountTriple {
    i64 f = 0;   // both gcd and ratio condition
    i64 f1 = 0;  // gcd condition only
    i64 f2 = 0;  // ratio condition only
};

namespace detail {

// All positive (p,q) with q^2 - p^2 = n come from divisor pairs d1*d2 = n,
// d1 < d2, d1 and d2 of the same parity: q = (d1+d2)/2, p = (d2-d1)/2.
template <typename Visit>
void visit_difference_of_squares(i64 n, Visit&& visit) {
    for (i64 d1 : divisors(n)) {
        const i64 d2 = n / d1;
        if (d1 >= d2) break;
        if ((d1 & 1) != (d2 & 1)) continue;
        visit((d2 - d1) / 2, (d1 + d2) / 2);  // (p, q), p > 0
    }
}

inline void require_squarefree_D(i64 D, i64 r) {
    if (D < 1 || !is_squarefree(D))
        throw std::invalid_argument("D must be a positive squarefree integer");
    if (r < 1) throw std::invalid_argument("r must be positive");
}

}  // namespace detail

/// All (p,q) with p,q > 0, q^2 - p^2 = r^2 D, gcd(p,q) = 1, 2p <= q.
inline std::set<std::pair<i64, i64>> solve_pq(i64 D, i64 r = 1) {
    detail::require_squarefree_D(D, r);
    std::set<std::pair<i64, i64>> out;
    detail::visit_difference_of_squares(r * r * D, [&](i64 p, i64 q) {
        if (std::gcd(p, q) == 1 && 2 * p <= q) out.emplace(p, q);
    });
    return out;
}

/// Smallest divisor d of D with D <= nu*d^2 and d^2 < D, if any.
/// nu is an exact rational nu_num/nu_den > 1; the test is cross-multiplied.
inline std::optional<i64> nearsquare_witness(i64 D, i64 nu_num, i64 nu_den = 1) {
    if (D < 1 || !is_squarefree(D))
        throw std::invalid_argument("D must be a positive squarefree integer");
    if (nu_den < 1 || nu_num <= nu_den)
        throw std::invalid_argument("nu must be a rational greater than 1");
    for (i64 d : divisors(D)) {
        if (d * d >= D) break;
        if (nu_num * d * d >= nu_den * D) return d;
    }
    return std::nullopt;
}

inline CountTriple count_functions(i64 D, i64 r = 1) {
    detail::require_squarefree_D(D, r);
    CountTriple t;
    detail::visit_difference_of_squares(r * r * D, [&](i64 p, i64 q) {
        const bool coprime = std::gcd(p, q) == 1;
        const bool half = 2 * p <= q;
        if (coprime) ++t.f1;
        if (half) ++t.f2;
        if (coprime && half) ++t.f;
    });
    return t;
}

/// Number of divisors b of r^2 D with r sqrt(D) < b <= r sqrt(3D),
/// as an exact squared comparison. Cross-check for f2; the two disagree
/// for even D, where no same-parity divisor pair exists.
inline i64 f2_divisor_count(i64 D, i64 r = 1) {
    detail::require_squarefree_D(D, r);
    const i64 n = r * r * D;
    i64 count = 0;
    for (i64 b : divisors(n))
        if (b * b > n && b * b <= 3 * n) ++count;
    return count;
}

struct BoundReport {
    bool f1_bound_ok = false;  // f1(1) <= 2^(omega(D)-1)
    i64 f = 0;                 // f(1), reported against 2^omega(D)
    i64 two_pow_omega = 1;
};

inline BoundReport bound_report(i64 D) {
    if (D % 2 == 0) throw std::invalid_argument("bound_report: D must be odd");
    const auto t = count_functions(D, 1);
    const int om = factorize(D).omega();
    BoundReport rep;
    rep.f = t.f;
    rep.two_pow_omega = i64{1} << om;
    const i64 f1_bound = om == 0 ? 0 : i64{1} << (om - 1);
    rep.f1_bound_ok = t.f1 <= f1_bound;
    return rep;
}

}  // namespace wrideal
