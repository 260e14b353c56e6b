#pragma once

// Set representations: constraint form with per-row strictness (FaceForm),
// generator form (GenForm), polyhedral cones in generator form (Cone), and
// constraint systems with existential auxiliary variables (LiftedSystem).
//
// Conventions:
//   * GenForm with no points denotes the empty set, whatever rays it lists.
//   * A FaceForm/LiftedSystem with no LT rows denotes a closed set; closure()
//     relaxes LT to LE, which equals the topological closure whenever the
//     strict system is nonempty (callers test emptiness first).

#include <msel/lp.hpp>
#include <msel/rational.hpp>

#include <algorithm>
#include <vector>

namespace msel {

struct FaceForm {
    int dim = 0;
    std::vector<LinRow> rows;
};

struct GenForm {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;

    bool empty() const { return points.empty(); }
};

// Polyhedral cone, kept in generator form: cone(rays) + span(lineality).
struct Cone {
    int dim = 0;
    std::vector<Vec> rays;
    std::vector<Vec> lineality;

    static Cone full_space(int d) {
        Cone c;
        c.dim = d;
        for (int i = 0; i < d; ++i) {
            Vec e = zero_vec(d);
            e[i] = 1;
            c.lineality.push_back(e);
        }
        return c;
    }
    static Cone origin(int d) {
        Cone c;
        c.dim = d;
        return c;
    }
};

// { x in R^dim : exists u in R^aux with every row holding on (x, u) }.
struct LiftedSystem {
    int dim = 0;
    int aux = 0;
    std::vector<LinRow> rows;
};

inline LiftedSystem lift(const FaceForm& f) { return LiftedSystem{f.dim, 0, f.rows}; }

inline FaceForm closure(FaceForm f) {
    for (auto& r : f.rows)
        if (r.rel == Rel::LT) r.rel = Rel::LE;
    return f;
}

inline LiftedSystem closure(LiftedSystem s) {
    for (auto& r : s.rows)
        if (r.rel == Rel::LT) r.rel = Rel::LE;
    return s;
}

inline bool has_strict_rows(const std::vector<LinRow>& rows) {
    return std::any_of(rows.begin(), rows.end(),
                       [](const LinRow& r) { return r.rel == Rel::LT; });
}

inline FaceForm infeasible_face(int dim) {
    FaceForm f;
    f.dim = dim;
    f.rows.push_back(LinRow{zero_vec(dim), Rat(-1), Rel::LE});
    return f;
}

inline LiftedSystem infeasible_lifted(int dim) { return lift(infeasible_face(dim)); }

// Evaluates the rows at a concrete full-length point (no existentials left).
inline bool satisfies(const Vec& x, const std::vector<LinRow>& rows) {
    for (const auto& r : rows) {
        Rat v = dot(r.a, x);
        switch (r.rel) {
            case Rel::LE: if (!(v <= r.b)) return false; break;
            case Rel::LT: if (!(v < r.b)) return false; break;
            case Rel::EQ: if (!(v == r.b)) return false; break;
        }
    }
    return true;
}

namespace detail {

// Canonical scaling for a row (a, b): coprime integers, relation kept.
inline LinRow canonical_row(LinRow r) {
    Vec full = r.a;
    full.push_back(r.b);
    full = r.rel == Rel::EQ ? primitive_signed(full) : primitive(full);
    r.b = full.back();
    full.pop_back();
    r.a = std::move(full);
    return r;
}

inline bool row_less(const LinRow& x, const LinRow& y) {
    if (x.rel != y.rel) return static_cast<int>(x.rel) > static_cast<int>(y.rel);  // EQ first
    if (x.a != y.a) return lex_less(x.a, y.a);
    return x.b < y.b;
}

inline bool row_eq(const LinRow& x, const LinRow& y) {
    return x.rel == y.rel && x.a == y.a && x.b == y.b;
}

// Sorts, dedupes and drops trivially true rows (0 . x rel b).
inline std::vector<LinRow> canonical_rows(std::vector<LinRow> rows, int dim) {
    std::vector<LinRow> out;
    bool contradictory = false;
    for (auto& r : rows) {
        LinRow c = canonical_row(std::move(r));
        if (is_zero(c.a)) {
            bool ok = c.rel == Rel::EQ ? (c.b == 0) : (c.rel == Rel::LE ? c.b >= 0 : c.b > 0);
            if (!ok) contradictory = true;
            continue;
        }
        out.push_back(std::move(c));
    }
    if (contradictory) return infeasible_face(dim).rows;
    std::sort(out.begin(), out.end(), row_less);
    out.erase(std::unique(out.begin(), out.end(), row_eq), out.end());
    return out;
}

inline void sort_dedupe(std::vector<Vec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

}  // namespace detail

}  // namespace msel
