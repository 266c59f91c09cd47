#pragma once

#include <functional>
#include <map>

#include "wrideal/arith.hpp"
#include "wrideal/diophantine.hpp"
#include "wrideal/latgeom.hpp"
#include "wrideal/quadfield.hpp"

namespace wrideal {

/// Per-D scan row over squarefree D.
struct SurveyRecord {
    i64 D = 1;
    bool nearsquare3 = false;  // 3-nearsquare witness exists
    bool solvable = false;     // f(1) >= 1, or the D = 1 square class
    i64 f = 0;
    i64 f1 = 0;
    i64 f2 = 0;
    i64 omega = 0;
    i64 tau = 1;
    bool f1_bound_ok = true;
};

struct SurveySummary {
    i64 N = 0;
    i64 squarefree_count = 0;  // |A(N)|
    i64 nearsquare_count = 0;  // |B(N)|, 3-nearsquare members
    i64 solvable_count = 0;
};

namespace detail {

inline SurveyRecord survey_record(i64 D, const Factorization& fact) {
    SurveyRecord rec;
    rec.D = D;
    rec.omega = fact.omega();
    rec.tau = fact.tau();
    const auto divs = divisors_of(fact);
    for (i64 d : divs) {
        if (d * d >= D) break;
        if (3 * d * d >= D) { rec.nearsquare3 = true; break; }
    }
    const i64 n = D;
    for (i64 d1 : divs) {
        const i64 d2 = n / d1;
        if (d1 >= d2) break;
        if ((d1 & 1) != (d2 & 1)) continue;
        const i64 p = (d2 - d1) / 2, q = (d1 + d2) / 2;
        const bool coprime = std::gcd(p, q) == 1;
        const bool half = 2 * p <= q;
        if (coprime) ++rec.f1;
        if (half) ++rec.f2;
        if (coprime && half) ++rec.f;
    }
    rec.solvable = rec.f >= 1 || D == 1;  // Z[i] is WR via the p = 0 square class
    const i64 f1_bound = rec.omega == 0 ? 0 : i64{1} << (rec.omega - 1);
    rec.f1_bound_ok = rec.f1 <= f1_bound;
    return rec;
}

}  // namespace detail

/// Scan squarefree D in 1..N in ascending order, invoking row_cb on each
/// record; returns the summary counts.
template <typename RowCb>
SurveySummary scan_fields(i64 N, RowCb&& row_cb) {
    if (N < 1) throw std::invalid_argument("scan_fields: N must be positive");
    const SpfSieve spf(N);
    SurveySummary sum;
    sum.N = N;
    for (i64 D = 1; D <= N; ++D) {
        const auto fact = spf.factorize(D);
        if (!fact.squarefree()) continue;
        const SurveyRecord rec = detail::survey_record(D, fact);
        ++sum.squarefree_count;
        if (rec.nearsquare3) ++sum.nearsquare_count;
        if (rec.solvable) ++sum.solvable_count;
        row_cb(rec);
    }
    return sum;
}

struct SurveyResult {
    std::vector<SurveyRecord> records;
    SurveySummary summary;
};

inline SurveyResult scan_fields(i64 N) {
    SurveyResult out;
    out.summary = scan_fields(N, [&](const SurveyRecord& r) { out.records.push_back(r); });
    return out;
}

/// Density metrics: |B(N)|/|A(N)| against the constant (sqrt(3)-1)/(2 sqrt(3)),
/// plus the solvable ratio as a separate metric.
struct DensityReport {
    i64 N = 0;
    i64 squarefree_count = 0;
    i64 nearsquare_count = 0;
    i64 solvable_count = 0;
    double bound_constant = 0.0;  // display only
};

inline DensityReport density_report(i64 N) {
    if (N < 1) throw std::invalid_argument("density_report: N must be positive");
    const SurveySummary s = scan_fields(N, [](const SurveyRecord&) {});
    return {s.N, s.squarefree_count, s.nearsquare_count, s.solvable_count,
            (std::sqrt(3.0) - 1.0) / (2.0 * std::sqrt(3.0))};
}

/// Reduced-form class number of the imaginary quadratic field Q(sqrt(-D)),
/// with fundamental discriminant -D or -4D.
struct ClassNumberRecord {
    i64 D = 1;
    i64 delta = -4;
    i64 h = 1;
    i64 wr_classes = 0;
};

inline ClassNumberRecord class_number_imag(i64 D) {
    if (D < 1 || !is_squarefree(D))
        throw std::invalid_argument("class_number_imag: D must be positive squarefree");
    ClassNumberRecord rec;
    rec.D = D;
    rec.delta = ((-D % 4) + 4) % 4 == 1 ? -D : -4 * D;
    const i64 absd = -rec.delta;
    // reduced primitive forms (a, b, c): b^2 - 4ac = delta, |b| <= a <= c,
    // gcd(a,b,c) = 1, b >= 0 when |b| = a or a = c
    i64 h = 0;
    for (i64 a = 1; 3 * a * a <= absd; ++a)
        for (i64 b = -a; b <= a; ++b) {
            const i64 num = b * b + absd;
            if (num % (4 * a) != 0) continue;
            const i64 c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (b == -a || a == c)) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            ++h;
        }
    rec.h = h;
    rec.wr_classes = D == 1 ? 1 : count_functions(D, 1).f;
    return rec;
}

/// WR-ideal classification for one field: enumerate ideals, keep the WR
/// ones, group by similarity class.
struct ClassReport {
    i64 D = 1;
    std::vector<PqClass> classes;           // ascending (p, q, r, D)
    std::vector<IdealBasis> representatives;  // all WR ideals found, (a, g, b) order
    i64 h = 0;  // imaginary fields only, 0 otherwise
    i64 wr_class_count = 0;
};

inline ClassReport classify_wr_ideals(const FieldDesc& field, i64 a_max) {
    ClassReport rep;
    rep.D = field.abs_d();
    std::map<PqClass, i64> seen;
    for (const IdealBasis& I : enumerate_ideals(field, a_max)) {
        const QuadForm F = gram_of_ideal(I);
        if (!is_wr(F)) continue;
        rep.representatives.push_back(I);
        ++seen[similarity_class(F)];
    }
    for (const auto& [cls, count] : seen) rep.classes.push_back(cls);
    rep.wr_class_count = static_cast<i64>(rep.classes.size());
    if (field.imaginary()) rep.h = class_number_imag(rep.D).h;
    return rep;
}

/// Principal WR ideals from generators x + y*delta with |x|, |y| <= height,
/// deduplicated by canonical basis; first generator found is kept.
struct PrincipalWrHit {
    i64 x = 0, y = 0;
    IdealBasis ideal;
    PqClass cls;
};

inline std::vector<PrincipalWrHit> principal_wr_search(const FieldDesc& field, i64 height) {
    if (height < 1) throw std::invalid_argument("principal_wr_search: height must be positive");
    std::map<std::tuple<i64, i64, i64>, PrincipalWrHit> found;
    for (i64 x = -height; x <= height; ++x)
        for (i64 y = -height; y <= height; ++y) {
            if (x == 0 && y == 0) continue;
            const IdealBasis I = principal_ideal_basis(field, x, y);
            const auto key = std::make_tuple(I.a, I.g, I.b);
            if (found.count(key)) continue;
            const QuadForm F = gram_of_ideal(I);
            if (!is_wr(F)) continue;
            found.emplace(key, PrincipalWrHit{x, y, I, similarity_class(F)});
        }
    std::vector<PrincipalWrHit> out;
    for (const auto& [key, hit] : found) out.push_back(hit);
    return out;
}

/// One reproduced row of the published table of WR ideals in real fields
/// Q(sqrt(D)), D = 1 (mod 4), h = 1.
struct Table1Row {
    i64 D;
    i64 a1, b1;  // first ideal <a1, b1 + delta>
    i64 a2, b2;  // second ideal <a2, b2 + delta>
    i64 p, q, r; // shared similarity class
};

inline std::vector<Table1Row> table1_report() {
    static constexpr struct { i64 D, a1, b1, a2, b2, p, q; } expected[] = {
        {21, 3, 1, 7, 3, 2, 5},
        {77, 7, 3, 11, 5, 2, 9},
        {133, 7, 3, 19, 9, 6, 13},
        {209, 11, 5, 19, 9, 4, 15},
    };
    std::vector<Table1Row> rows;
    for (const auto& e : expected) {
        const FieldDesc field = make_field(e.D);
        for (const auto& [a, b] : {std::pair{e.a1, e.b1}, std::pair{e.a2, e.b2}}) {
            if (!validate_ideal(field, a, b, 1))
                throw std::logic_error("table1_report: listed ideal is not a valid canonical basis");
            const QuadForm F = gram_of_ideal({field, a, b, 1});
            if (!is_wr(F)) throw std::logic_error("table1_report: listed ideal is not WR");
            const PqClass cls = similarity_class(F);
            if (cls.p != e.p || cls.q != e.q || cls.r != 1 || cls.D != e.D)
                throw std::logic_error("table1_report: similarity class mismatch");
        }
        rows.push_back({e.D, e.a1, e.b1, e.a2, e.b2, e.p, e.q, 1});
    }
    return rows;
}

}  // namespace wrideal
