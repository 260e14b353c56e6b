#pragma once

// Exact rational linear programming over free variables.
//
// Dense two-phase primal simplex with Bland's anti-cycling rule. Pivoting
// order is a pure function of the input row/column order, so optima and
// witnesses are reproducible across runs and platforms. Free variables are
// split into nonnegative pairs; slacks are added per inequality row and
// artificials only where a slack cannot seed the initial basis.

#include <msel/rational.hpp>

#include <cassert>
#include <optional>
#include <vector>

namespace msel {

enum class Rel { LE, LT, EQ };

// One linear row  a . x  rel  b  over the ambient variables.
struct LinRow {
    Vec a;
    Rat b;
    Rel rel = Rel::LE;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;        // objective at optimum (when Optimal)
    Vec x;            // optimizer (when Optimal)
    Vec ray;          // improving recession direction (when Unbounded)
};

namespace detail {

class SimplexTableau {
public:
    // rows must contain only LE / EQ relations.
    SimplexTableau(const std::vector<LinRow>& rows, int nvars) : nvars_(nvars) {
        nslack_ = 0;
        for (const auto& r : rows)
            if (r.rel == Rel::LE) ++nslack_;
        int m = static_cast<int>(rows.size());
        ncols_ = 2 * nvars_ + nslack_ + m;  // worst case: artificial per row
        art_base_ = 2 * nvars_ + nslack_;
        nart_ = 0;
        basis_.assign(m, -1);
        tab_.assign(m, Vec(ncols_ + 1, Rat(0)));

        int slack = 0;
        for (int i = 0; i < m; ++i) {
            const LinRow& r = rows[i];
            assert(r.rel != Rel::LT);
            assert(static_cast<int>(r.a.size()) == nvars_);
            Vec& row = tab_[i];
            for (int j = 0; j < nvars_; ++j) {
                row[2 * j] = r.a[j];
                row[2 * j + 1] = -r.a[j];
            }
            row[ncols_] = r.b;
            int slack_col = -1;
            if (r.rel == Rel::LE) {
                slack_col = 2 * nvars_ + slack;
                row[slack_col] = 1;
                ++slack;
            }
            if (row[ncols_] < 0) {
                for (Rat& v : row) v = -v;
            }
            if (slack_col >= 0 && row[slack_col] > 0) {
                basis_[i] = slack_col;  // slack seeds the basis
            } else {
                int art = art_base_ + nart_++;
                row[art] = 1;
                basis_[i] = art;
            }
        }
    }

    bool feasible() {
        if (nart_ == 0) return true;
        // phase 1: maximize -(sum of artificials)
        Vec cost(ncols_, Rat(0));
        for (int j = art_base_; j < art_base_ + nart_; ++j) cost[j] = -1;
        price_out(cost);
        run_simplex(/*forbid_artificials=*/false);
        if (objval_ != 0) return false;
        purge_artificials();
        return true;
    }

    // Maximizes obj (length = 2*nvars encoding of a free objective) assuming
    // a feasible basis. Returns Optimal or Unbounded.
    LpStatus maximize(const Vec& c_free) {
        Vec cost(ncols_, Rat(0));
        for (int j = 0; j < nvars_; ++j) {
            cost[2 * j] = c_free[j];
            cost[2 * j + 1] = -c_free[j];
        }
        price_out(cost);
        bool bounded = run_simplex(/*forbid_artificials=*/true);
        return bounded ? LpStatus::Optimal : LpStatus::Unbounded;
    }

    Rat objective() const { return objval_; }

    Vec solution() const {
        Vec z(ncols_, Rat(0));
        for (size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] >= 0) z[basis_[i]] = tab_[i][ncols_];
        Vec x(nvars_);
        for (int j = 0; j < nvars_; ++j) x[j] = z[2 * j] - z[2 * j + 1];
        return x;
    }

    // Improving ray recorded by run_simplex when unbounded.
    Vec ray() const {
        Vec x(nvars_, Rat(0));
        if (ray_col_ < 0) return x;
        Vec z(ncols_, Rat(0));
        z[ray_col_] = 1;
        for (size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i] >= 0) z[basis_[i]] = -tab_[i][ray_col_];
        for (int j = 0; j < nvars_; ++j) x[j] = z[2 * j] - z[2 * j + 1];
        return x;
    }

private:
    void price_out(const Vec& cost) {
        red_ = cost;
        red_.push_back(Rat(0));
        objval_ = 0;
        for (size_t i = 0; i < basis_.size(); ++i) {
            int b = basis_[i];
            if (b < 0 || cost[b] == 0) continue;
            Rat cb = cost[b];
            for (int j = 0; j <= ncols_; ++j) red_[j] -= cb * tab_[i][j];
        }
        objval_ = -red_[ncols_];
        red_[ncols_] = 0;
    }

    // Bland: entering = lowest-index improving column, leaving = lowest basic
    // index among minimum-ratio rows. Returns false iff unbounded.
    bool run_simplex(bool forbid_artificials) {
        ray_col_ = -1;
        int limit = forbid_artificials ? art_base_ : ncols_;
        for (;;) {
            int enter = -1;
            for (int j = 0; j < limit; ++j) {
                if (red_[j] > 0) { enter = j; break; }
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (size_t i = 0; i < tab_.size(); ++i) {
                if (basis_[i] < 0 || tab_[i][enter] <= 0) continue;
                Rat ratio = tab_[i][ncols_] / tab_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best = ratio;
                }
            }
            if (leave < 0) { ray_col_ = enter; return false; }
            pivot(leave, enter);
        }
    }

    void pivot(int row, int col) {
        Vec& pr = tab_[row];
        Rat inv = Rat(1) / pr[col];
        for (int j = 0; j <= ncols_; ++j) pr[j] *= inv;
        for (size_t i = 0; i < tab_.size(); ++i) {
            if (static_cast<int>(i) == row) continue;
            Rat f = tab_[i][col];
            if (f == 0) continue;
            for (int j = 0; j <= ncols_; ++j) tab_[i][j] -= f * pr[j];
        }
        Rat f = red_[col];
        if (f != 0) {
            for (int j = 0; j < ncols_; ++j) red_[j] -= f * pr[j];
            objval_ += f * pr[ncols_];
            red_[col] = 0;
        }
        basis_[row] = col;
    }

    // After a zero-value phase 1: pivot basic artificials out or retire the
    // (then redundant) row, so phase 2 never touches an artificial again.
    void purge_artificials() {
        for (size_t i = 0; i < tab_.size(); ++i) {
            if (basis_[i] < art_base_) continue;
            int col = -1;
            for (int j = 0; j < art_base_; ++j) {
                if (tab_[i][j] != 0) { col = j; break; }
            }
            if (col >= 0) {
                pivot(static_cast<int>(i), col);
            } else {
                basis_[i] = -1;  // redundant row, rhs must be 0
            }
        }
    }

    int nvars_, nslack_, nart_, ncols_, art_base_;
    std::vector<Vec> tab_;
    std::vector<int> basis_;
    Vec red_;
    Rat objval_;
    int ray_col_ = -1;
};

}  // namespace detail

// Maximizes c . x over { x in R^n : rows }. Rows must be LE or EQ; strict
// rows are a layer above (see feasible_point in geometry.hpp).
inline LpResult lp_maximize(const Vec& c, const std::vector<LinRow>& rows, int nvars) {
    assert(static_cast<int>(c.size()) == nvars);
    LpResult res;
    if (nvars == 0) {
        for (const auto& r : rows) {
            bool ok = r.rel == Rel::EQ ? (r.b == 0) : (r.b >= 0);
            if (!ok) return res;  // infeasible
        }
        res.status = LpStatus::Optimal;
        res.value = 0;
        return res;
    }
    detail::SimplexTableau t(rows, nvars);
    if (!t.feasible()) return res;
    res.status = t.maximize(c);
    if (res.status == LpStatus::Optimal) {
        res.x = t.solution();
        res.value = t.objective();
    } else {
        res.x = t.solution();
        res.ray = t.ray();
    }
    return res;
}

inline LpResult lp_minimize(const Vec& c, const std::vector<LinRow>& rows, int nvars) {
    LpResult r = lp_maximize(vneg(c), rows, nvars);
    if (r.status != LpStatus::Infeasible) r.value = -r.value;
    return r;
}

}  // namespace msel
