#pragma once

// Exact rational scalars and small dense linear algebra used throughout.
// All quantities in this library (probabilities, prices, coordinates,
// tableau entries) are boost::multiprecision rationals backed by GMP,
// kept in canonical form (positive denominator, coprime).

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace msel {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Anything else,
// including floats, is rejected.
inline Rat parse_rat(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("not a rational: '" + std::string(s) + "'"); };
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string_view::npos) bad();
    s = s.substr(a, b - a + 1);
    bool seen_digit = false, seen_slash = false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '-' || c == '+') {
            if (i != 0 && s[i - 1] != '/') bad();
        } else if (c == '/') {
            if (seen_slash || !seen_digit) bad();
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else {
            bad();
        }
    }
    if (!seen_digit || s.back() == '/' || s.back() == '-' || s.back() == '+') bad();
    Rat r;
    try {
        r.assign(std::string(s));
    } catch (const std::exception&) {
        bad();
    }
    if (denominator(r) == 0) bad();
    // boost does not canonicalize string input; GMP arithmetic requires it
    mpq_canonicalize(r.backend().data());
    return r;
}

inline std::string rat_str(const Rat& r) { return r.str(); }

// -- vector helpers ---------------------------------------------------------

inline Vec zero_vec(size_t n) { return Vec(n, Rat(0)); }

inline Rat dot(const Vec& a, const Vec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec vadd(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vsub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vscale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Vec vneg(const Vec& a) { return vscale(Rat(-1), a); }

inline bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

inline bool lex_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Scales a nonzero rational vector to the coprime integer vector with the
// same direction. Zero vectors pass through.
inline Vec primitive(const Vec& a) {
    Int l = 1;
    for (const Rat& x : a) l = lcm(l, denominator(x));
    std::vector<Int> num(a.size());
    Int g = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        num[i] = numerator(a[i]) * (l / denominator(a[i]));
        g = gcd(g, num[i]);
    }
    if (g == 0) return zero_vec(a.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(num[i] / g);
    return r;
}

// Same, but also fixes the sign so the first nonzero entry is positive.
// Used for lineality directions and equality rows, where orientation is
// meaningless.
inline Vec primitive_signed(const Vec& a) {
    Vec r = primitive(a);
    for (const Rat& x : r) {
        if (x > 0) break;
        if (x < 0) return vneg(r);
    }
    return r;
}

// -- Gaussian elimination ---------------------------------------------------

// Reduces `rows` in place to row echelon form (first-nonzero pivoting, rows
// kept in order of first use). Returns the pivot column of each surviving
// row; zero rows are dropped.
inline std::vector<int> row_echelon(Mat& rows, int ncols) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < ncols && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rat inv = Rat(1) / rows[r][col];
        for (int j = col; j < ncols; ++j) rows[r][j] *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (int j = col; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : row . x = 0 for every row}.
inline Mat kernel_basis(Mat rows, int ncols) {
    std::vector<int> pivots = row_echelon(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[p] = true;
    Mat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(ncols);
        v[free] = 1;
        for (size_t i = 0; i < rows.size(); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(primitive_signed(v));
    }
    return basis;
}

// Indices of a maximal linearly independent subset of `rows`, greedy in
// input order.
inline std::vector<int> independent_rows(const Mat& rows, int ncols) {
    Mat ech;
    std::vector<int> chosen;
    for (size_t i = 0; i < rows.size(); ++i) {
        Mat trial = ech;
        trial.push_back(rows[i]);
        size_t before = trial.size();
        row_echelon(trial, ncols);
        if (trial.size() == before) {
            ech = std::move(trial);
            chosen.push_back(static_cast<int>(i));
        }
    }
    return chosen;
}

inline int rank_of(Mat rows, int ncols) {
    row_echelon(rows, ncols);
    return static_cast<int>(rows.size());
}

}  // namespace msel
