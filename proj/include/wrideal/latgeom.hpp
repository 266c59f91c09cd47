#pragma once

#include "wrideal/arith.hpp"
#include "wrideal/diophantine.hpp"
#include "wrideal/quadfield.hpp"

namespace wrideal {

/// Integral binary quadratic form A x^2 + B x y + C y^2, the exact Gram
/// data of a planar lattice basis.
struct QuadForm {
    i64 A = 1;
    i64 B = 0;
    i64 C = 1;

    auto operator<=>(const QuadForm&) const = default;

    i64 discriminant() const { return B * B - 4 * A * C; }
    bool positive_definite() const { return A > 0 && discriminant() < 0; }
    bool matrix_integral() const { return B % 2 == 0; }
    i64 eval(i64 x, i64 y) const { return A * x * x + B * x * y + C * y * y; }
};

/// Basis change U = (s1 s2; s3 s4), det +-1. Applying U to a form F gives
/// F'(x,y) = F(s1 x + s2 y, s3 x + s4 y).
struct Unimodular {
    i64 s1 = 1, s2 = 0, s3 = 0, s4 = 1;

    i64 det() const { return s1 * s4 - s2 * s3; }

    Unimodular then(const Unimodular& o) const {
        // column composition: this * o
        return {s1 * o.s1 + s2 * o.s3, s1 * o.s2 + s2 * o.s4,
                s3 * o.s1 + s4 * o.s3, s3 * o.s2 + s4 * o.s4};
    }
};

inline QuadForm apply_basis_change(const QuadForm& F, const Unimodular& U) {
    return {F.eval(U.s1, U.s3),
            2 * (F.A * U.s1 * U.s2 + F.C * U.s3 * U.s4) +
                F.B * (U.s1 * U.s4 + U.s2 * U.s3),
            F.eval(U.s2, U.s4)};
}

struct ReductionResult {
    QuadForm reduced;
    Unimodular transform;
};

/// Gauss-Lagrange reduction to 0 <= B <= A <= C, with the basis change
/// that carries the input to the reduced form. A is the lattice minimum,
/// C the second successive minimum.
inline ReductionResult reduce_form(QuadForm F) {
    if (!F.positive_definite())
        throw std::invalid_argument("reduce_form: form must be positive definite");
    Unimodular U;
    for (;;) {
        if (F.A > F.C) {
            const Unimodular swap{0, 1, 1, 0};
            F = apply_basis_change(F, swap);
            U = U.then(swap);
        }
        // shift B into (-A, A]
        const i64 twoA = 2 * F.A;
        i64 k = 0;
        if (F.B > F.A || F.B <= -F.A) {
            // round B/(2A) to nearest, halves toward zero so B lands in (-A, A]
            k = (F.B >= 0 ? F.B + F.A - 1 : F.B - F.A) / twoA;
        }
        if (k != 0) {
            const Unimodular shift{1, -k, 0, 1};
            F = apply_basis_change(F, shift);
            U = U.then(shift);
        }
        if (F.A <= F.C) break;
    }
    if (F.B < 0) {
        const Unimodular flip{1, 0, 0, -1};
        F = apply_basis_change(F, flip);
        U = U.then(flip);
    }
    return {F, U};
}

inline bool is_wr(const QuadForm& F) {
    const QuadForm R = reduce_form(F).reduced;
    return R.A == R.C;
}

/// 6 for the hexagonal class, 4 for other WR forms, 2 otherwise.
inline int minimal_vector_count(const QuadForm& F) {
    const QuadForm R = reduce_form(F).reduced;
    if (R.A == R.B && R.B == R.C) return 6;
    if (R.A == R.C) return 4;
    return 2;
}

/// Squarefree decomposition n = r^2 * D with D squarefree.
inline std::pair<i64, i64> squarefree_part(i64 n) {
    i64 D = 1, r = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        for (int k = 0; k < e / 2; ++k) r *= p;
        if (e % 2 == 1) D *= p;
    }
    return {D, r};
}

/// Similarity class (p, q, r, D) of a WR form: cos(theta) = B/(2A) = p/q
/// in lowest terms on the reduced form, q^2 - p^2 = r^2 D.
inline PqClass similarity_class(const QuadForm& F) {
    const QuadForm R = reduce_form(F).reduced;
    if (R.A != R.C) throw std::invalid_argument("similarity_class: form is not WR");
    const i64 g = std::gcd(R.B, 2 * R.A);
    const i64 p = R.B == 0 ? 0 : R.B / g;
    const i64 q = R.B == 0 ? 1 : 2 * R.A / g;
    const auto [D, r] = squarefree_part(q * q - p * p);
    return {p, q, r, D};
}

/// Exact integer identity behind sin(theta) = r sqrt(D) / q: on the
/// reduced form (A, B, A), (4A^2 - B^2) q^2 = 4A^2 (q^2 - p^2).
inline bool verify_angle_identity(const QuadForm& F, const PqClass& c) {
    const QuadForm R = reduce_form(F).reduced;
    if (R.A != R.C) return false;
    const i128 lhs = (i128{4} * R.A * R.A - i128{R.B} * R.B) * c.q * c.q;
    const i128 rhs = i128{4} * R.A * R.A * (i128{c.q} * c.q - i128{c.p} * c.p);
    return lhs == rhs;
}

struct ShortVector {
    i64 x = 0, y = 0, value = 0;

    auto operator<=>(const ShortVector&) const = default;
};

/// All nonzero (x, y) with F(x, y) <= bound, sorted by value then
/// lexicographic. Independent of reduce_form: plain box enumeration with
/// box sides derived from the discriminant.
inline std::vector<ShortVector> brute_force_minima(const QuadForm& F, i64 bound) {
    if (!F.positive_definite())
        throw std::invalid_argument("brute_force_minima: form must be positive definite");
    if (bound < 1) throw std::invalid_argument("brute_force_minima: bound must be positive");
    const i64 disc = 4 * F.A * F.C - F.B * F.B;
    // F(x,y) <= t confines x^2 <= 4Ct/disc and y^2 <= 4At/disc
    const i64 xmax = isqrt(4 * F.C * bound / disc) + 1;
    const i64 ymax = isqrt(4 * F.A * bound / disc) + 1;
    std::vector<ShortVector> out;
    for (i64 x = -xmax; x <= xmax; ++x)
        for (i64 y = -ymax; y <= ymax; ++y) {
            if (x == 0 && y == 0) continue;
            const i64 v = F.eval(x, y);
            if (v <= bound) out.push_back({x, y, v});
        }
    std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
        return std::tie(a.value, a.x, a.y) < std::tie(b.value, b.x, b.y);
    });
    return out;
}

/// Exact norm form of the embedded ideal lattice, one closed formula per
/// (real/imaginary, m mod 4) case.
inline QuadForm gram_of_ideal(const IdealBasis& I) {
    const FieldDesc& f = I.field;
    if (!validate_ideal(f, I.a, I.b, I.g))
        throw std::invalid_argument("gram_of_ideal: invalid ideal basis");
    const i64 a = I.a, b = I.b, g = I.g, D = f.abs_d();
    if (!f.imaginary()) {
        if (!f.one_mod_four) return {2 * a * a, 4 * a * b, 2 * (b * b + g * g * D)};
        const i64 t = 2 * b + g;
        return {2 * a * a, 2 * a * t, (t * t + g * g * D) / 2};
    }
    if (!f.one_mod_four) return {a * a, 2 * a * b, b * b + g * g * D};
    const i64 t = 2 * b + g;
    return {a * a, a * t, (t * t + g * g * D) / 4};
}

/// Norm form of Omega_D(p, q), basis (q, 0), (p, r sqrt(D)).
inline QuadForm gram_of_omega(const PqClass& c) {
    if (!c.valid()) throw std::invalid_argument("gram_of_omega: invalid class token");
    return {c.q * c.q, 2 * c.p * c.q, c.q * c.q};
}

/// Norm form of the minimal IWR lattice (1/sqrt(q)) Omega_D(p, q).
inline QuadForm minimal_gram_of_class(const PqClass& c) {
    if (!c.valid()) throw std::invalid_argument("minimal_gram_of_class: invalid class token");
    return {c.q, 2 * c.p, c.q};
}

enum class WrRealVerdict { ImpliesR1, MinkowskiSufficient, Inconclusive };

/// Real-field criterion: a | 2D forces r = 1 for WR ideal lattices; the
/// Minkowski-reduction condition in turn implies a | 2D when the ideal is
/// WR. Caller must have divided out g.
inline WrRealVerdict wr_real_criterion(const IdealBasis& I) {
    const FieldDesc& f = I.field;
    if (f.imaginary()) throw std::invalid_argument("wr_real_criterion: field must be real");
    if (I.g != 1) throw std::invalid_argument("wr_real_criterion: normalize to g = 1 first");
    const i64 a = I.a, b = I.b, D = f.m;
    if (2 * D % a == 0) return WrRealVerdict::ImpliesR1;
    if (!f.one_mod_four) {
        if (std::min(a * a, b * b + D) >= 2 * a * b) return WrRealVerdict::MinkowskiSufficient;
    } else {
        // min{a^2, ((2b+1)^2 + D)/4} >= 2a(b+1), scaled by 4 to stay integral
        const i64 t = 2 * b + 1;
        if (std::min(4 * a * a, t * t + D) >= 8 * a * (b + 1))
            return WrRealVerdict::MinkowskiSufficient;
    }
    return WrRealVerdict::Inconclusive;
}

}  // namespace wrideal
