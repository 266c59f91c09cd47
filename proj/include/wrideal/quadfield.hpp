#pragma once

#include <cstdlib>
#include <numeric>
#include <tuple>

#include "wrideal/arith.hpp"
#include "wrideal/diophantine.hpp"

namespace wrideal {

/// Quadratic field Q(sqrt(m)), m squarefree, with its ring generator delta:
/// delta = (1-sqrt(m))/2 when m = 1 (mod 4), else delta = -sqrt(m).
/// delta satisfies delta^2 = delta_trace*delta - delta_norm.
struct FieldDesc {
    i64 m = 0;
    bool one_mod_four = false;
    i64 delta_trace = 0;
    i64 delta_norm = 0;

    bool imaginary() const { return m < 0; }
    i64 abs_d() const { return m < 0 ? -m : m; }

    auto operator<=>(const FieldDesc&) const = default;
};

inline FieldDesc make_field(i64 m) {
    if (m == 0 || m == 1) throw std::invalid_argument("make_field: m must not be 0 or 1");
    if (!is_squarefree(std::abs(m)))
        throw std::invalid_argument("make_field: m must be squarefree");
    FieldDesc f;
    f.m = m;
    f.one_mod_four = ((m % 4) + 4) % 4 == 1;
    if (f.one_mod_four) {
        f.delta_trace = 1;
        f.delta_norm = (1 - m) / 4;
    } else {
        f.delta_trace = 0;
        f.delta_norm = -m;
    }
    return f;
}

/// N(x + y*delta) in the {1, delta} integral basis. Negative values occur
/// for real fields.
inline i64 element_norm(const FieldDesc& field, i64 x, i64 y) {
    return x * x + x * y * field.delta_trace + y * y * field.delta_norm;
}

struct IdealBasis {
    FieldDesc field;
    i64 a = 1;
    i64 b = 0;
    i64 g = 1;

    auto operator<=>(const IdealBasis&) const = default;
};

/// Canonical-basis conditions: b < a, g | a, g | b, ag | N(b + g*delta).
/// Norm divisibility is tested on absolute values.
inline bool validate_ideal(const FieldDesc& field, i64 a, i64 b, i64 g) {
    if (a < 1 || g < 1 || b < 0) return false;
    if (b >= a) return false;
    if (a % g != 0 || b % g != 0) return false;
    const i64 nrm = element_norm(field, b, g);
    return nrm % (a * g) == 0;
}

inline i64 ideal_norm(const IdealBasis& I) { return I.a * I.g; }

/// All valid (a,b,g) with a <= a_max, ordered by (a, g, b). Includes
/// non-primitive ideals (g > 1).
inline std::vector<IdealBasis> enumerate_ideals(const FieldDesc& field, i64 a_max) {
    std::vector<IdealBasis> out;
    for (i64 a = 1; a <= a_max; ++a)
        for (i64 g : divisors(a))
            for (i64 b = 0; b < a; b += g)
                if (validate_ideal(field, a, b, g))
                    out.push_back({field, a, b, g});
    std::sort(out.begin(), out.end(), [](const IdealBasis& x, const IdealBasis& y) {
        return std::tie(x.a, x.g, x.b) < std::tie(y.a, y.g, y.b);
    });
    return out;
}

enum class FieldSign { real, imaginary };

/// WR ideal in Q(sqrt(+-D)) attached to a solution of p^2 + D = q^2.
/// The (a,b) branch is keyed on the congruence class mod 4 of the field's
/// own defining integer m, and the result is re-validated.
inline IdealBasis construct_wr_ideal(i64 D, i64 p, i64 q, FieldSign sign) {
    if (D < 1 || D % 2 == 0 || !is_squarefree(D))
        throw std::invalid_argument("construct_wr_ideal: D must be odd squarefree");
    if (p < 1 || q < 1 || p * p + D != q * q)
        throw std::invalid_argument("construct_wr_ideal: (p,q) must solve p^2+D=q^2");
    const i64 m = sign == FieldSign::real ? D : -D;
    const FieldDesc field = make_field(m);
    i64 a, b;
    if (field.one_mod_four) {
        a = p + q;
        b = (p + q - 1) / 2;
    } else {
        a = 2 * (p + q);
        b = p + q;
    }
    if (!validate_ideal(field, a, b, 1))
        throw std::logic_error("construct_wr_ideal: constructed basis failed validation");
    return {field, a, b, 1};
}

/// Canonical basis of the principal ideal (x + y*delta), via the column
/// Hermite normal form of the module spanned by alpha and delta*alpha.
inline IdealBasis principal_ideal_basis(const FieldDesc& field, i64 x, i64 y) {
    if (x == 0 && y == 0)
        throw std::invalid_argument("principal_ideal_basis: generator must be nonzero");
    // alpha = (x, y); delta*alpha = (-y*norm, x + y*trace) in the {1, delta} basis.
    const i64 u1 = x, v1 = y;
    const i64 u2 = -y * field.delta_norm, v2 = x + y * field.delta_trace;
    // Extended gcd on the delta coordinates.
    i64 old_r = v1, r = v2, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const i64 qt = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    i64 g = old_r;
    i64 bu = old_s * u1 + old_t * u2;  // second basis vector: bu + g*delta
    if (g < 0) { g = -g; bu = -bu; }
    const i64 det = u1 * v2 - u2 * v1;  // +-N(alpha)
    const i64 a = std::abs(det) / g;
    const i64 b = ((bu % a) + a) % a;
    if (!validate_ideal(field, a, b, g))
        throw std::logic_error("principal_ideal_basis: HNF basis failed validation");
    return {field, a, b, g};
}

}  // namespace wrideal
