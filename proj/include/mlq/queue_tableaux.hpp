#pragma once

// Column tableaux equivalent to multiline queues. The diagram of a partition
// lambda has lambda[k] boxes stacked over column k, plus a basement row
// holding a permutation of the column indices. A filling assigns each box a
// column value; the non-attacking condition makes fillings correspond one to
// one with queues, and the tableau statistics reproduce the queue weight.
//
// Box addresses are (column k, row j) with the basement at row j = 0 and box
// rows counted upward from 1. Entry values are 0-based cylinder columns.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "mlq/composition.hpp"
#include "mlq/mlq.hpp"
#include "mlq/qt_ring.hpp"
#include "mlq/xpoly.hpp"

namespace mlq {

struct QueueTableau {
    int n = 1;
    Composition lambda;                     // column heights, weakly decreasing, size n
    std::vector<int> basement;              // row-0 values, a permutation of 0..n-1
    std::vector<std::vector<int>> columns;  // columns[k][j-1] = entry at (k, j)

    int height(int k) const { return lambda[k]; }
    int entry(int k, int j) const { return j == 0 ? basement[k] : columns[k][j - 1]; }

    // A box repeating the value directly below it. Restricted boxes carry no
    // weight factor and never join triples.
    bool restricted(int k, int j) const { return entry(k, j) == entry(k, j - 1); }

    friend bool operator<(const QueueTableau& a, const QueueTableau& b) {
        return std::tie(a.lambda, a.basement, a.columns) < std::tie(b.lambda, b.basement, b.columns);
    }
    friend bool operator==(const QueueTableau& a, const QueueTableau& b) {
        return a.n == b.n && a.lambda == b.lambda && a.basement == b.basement &&
               a.columns == b.columns;
    }
};

// The canonical basement for type mu: columns of equal height read their
// basement values off the positions of mu holding that value, left to right
// in increasing position order.
inline std::vector<int> tableau_basement(const Composition& mu) {
    check_composition(mu);
    const int n = static_cast<int>(mu.size());
    const Composition lambda = sorted_type(mu);
    std::map<int, std::vector<int>> positions;
    for (int c = 0; c < n; ++c) positions[mu[c]].push_back(c);
    std::vector<int> basement(n);
    std::map<int, int> used;
    for (int k = 0; k < n; ++k) basement[k] = positions[lambda[k]][used[lambda[k]]++];
    return basement;
}

// Whether two distinct boxes of the diagram may never hold equal entries:
// same row, or adjacent rows with the lower box strictly to the right, or
// with the lower box to the left in an equally tall column. The basement row
// participates as row 0.
inline bool attacking(const Composition& lambda, int k, int j, int k2, int j2) {
    if (k == k2) return false;
    if (j == j2) return true;
    if (j2 == j - 1) return k2 > k || lambda[k2] == lambda[k];
    if (j == j2 - 1) return k > k2 || lambda[k] == lambda[k2];
    return false;
}

namespace detail {

inline void check_tableau_frame(const Composition& lambda, const std::vector<int>& basement) {
    const int n = static_cast<int>(lambda.size());
    if (static_cast<int>(basement.size()) != n)
        throw MismatchedArity("basement size must match the column count");
    if (!is_partition(lambda)) throw MismatchedArity("column heights must weakly decrease");
    std::vector<bool> seen(n, false);
    for (int v : basement) {
        if (v < 0 || v >= n || seen[v]) throw MismatchedArity("basement must be a permutation");
        seen[v] = true;
    }
    for (int k = 0; k + 1 < n; ++k)
        if (lambda[k] == lambda[k + 1] && basement[k] > basement[k + 1])
            throw MismatchedArity("equal-height columns need increasing basements");
}

}  // namespace detail

// All fillings of the diagram of lambda over the given basement with no two
// attacking boxes equal. Boxes are filled row by row upward, left to right,
// pruning against the already-placed attackers.
inline std::vector<QueueTableau> enumerate_qt(const Composition& lambda,
                                              const std::vector<int>& basement) {
    detail::check_tableau_frame(lambda, basement);
    const int n = static_cast<int>(lambda.size());
    QueueTableau cur;
    cur.n = n;
    cur.lambda = lambda;
    cur.basement = basement;
    cur.columns.resize(n);
    for (int k = 0; k < n; ++k) cur.columns[k].assign(lambda[k], -1);

    std::vector<std::pair<int, int>> boxes;  // (row, col), row-major upward
    const int max_h = lambda.empty() ? 0 : lambda[0];
    for (int j = 1; j <= max_h; ++j)
        for (int k = 0; k < n && lambda[k] >= j; ++k) boxes.emplace_back(j, k);

    std::vector<QueueTableau> out;
    auto fits = [&](int k, int j, int v) {
        for (int k2 = 0; k2 < n; ++k2) {
            if (k2 != k && lambda[k2] >= j && k2 < k && cur.entry(k2, j) == v) return false;
            if (k2 != k && lambda[k2] >= j - 1 && attacking(lambda, k, j, k2, j - 1) &&
                cur.entry(k2, j - 1) == v)
                return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == boxes.size()) {
            out.push_back(cur);
            return;
        }
        const auto [j, k] = boxes[idx];
        for (int v = 0; v < n; ++v) {
            if (!fits(k, j, v)) continue;
            cur.columns[k][j - 1] = v;
            self(self, idx + 1);
        }
        cur.columns[k][j - 1] = -1;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Fillings of type mu over the canonical basement.
inline std::vector<QueueTableau> enumerate_qt(const Composition& mu) {
    return enumerate_qt(sorted_type(mu), tableau_basement(mu));
}

// Boxes of the column strictly above (k, j).
inline int tableau_leg(const QueueTableau& T, int k, int j) { return T.lambda[k] - j; }

// Free partners of the pairing event at box (k, j), minus the target: boxes
// one row down in strictly shorter columns, plus equally tall columns whose
// box in this row is unrestricted and still unpaired at this box's turn (the
// pairing pass works right to left along the upper row's entries).
inline int tableau_arm(const QueueTableau& T, int k, int j) {
    int count = 0;
    for (int k2 = 0; k2 < T.n; ++k2) {
        if (k2 == k) continue;
        if (T.lambda[k2] < T.lambda[k]) {
            if (j >= 2 && T.lambda[k2] >= j - 1) ++count;
        } else if (T.lambda[k2] == T.lambda[k]) {
            if (!T.restricted(k2, j) && T.entry(k2, j) < T.entry(k, j)) ++count;
        }
    }
    return count;
}

// Sum of leg + 1 over the boxes whose strand wraps around the seam: the box
// below holds a strictly smaller column value.
inline int tableau_maj(const QueueTableau& T) {
    int total = 0;
    for (int k = 0; k < T.n; ++k)
        for (int j = 1; j <= T.lambda[k]; ++j)
            if (T.entry(k, j - 1) < T.entry(k, j)) total += tableau_leg(T, k, j) + 1;
    return total;
}

namespace detail {

// Whether w lies strictly inside the cyclic interval read rightward from
// `from` to `to`. Assumes the three columns are pairwise distinct.
inline bool skip_interval_contains(int from, int to, int w) {
    if (from < to) return from < w && w < to;
    return w > from || w < to;
}

}  // namespace detail

// Counts, over all unrestricted boxes x = (k, j) with j >= 2, the balls the
// strand of x skips: boxes y = (k2, j-1) lying cyclically between x and the
// box under x, where y sits in a strictly shorter column, or in an equally
// tall column whose row-j box is unrestricted and pairs after x.
inline int tableau_coinv(const QueueTableau& T) {
    int total = 0;
    for (int k = 0; k < T.n; ++k) {
        for (int j = 2; j <= T.lambda[k]; ++j) {
            const int v = T.entry(k, j);
            const int u = T.entry(k, j - 1);
            if (u == v) continue;
            for (int k2 = 0; k2 < T.n; ++k2) {
                if (k2 == k) continue;
                bool candidate = false;
                if (T.lambda[k2] < T.lambda[k])
                    candidate = T.lambda[k2] >= j - 1;
                else if (T.lambda[k2] == T.lambda[k])
                    candidate = !T.restricted(k2, j) && T.entry(k2, j) < v;
                if (!candidate) continue;
                if (detail::skip_interval_contains(v, u, T.entry(k2, j - 1))) ++total;
            }
        }
    }
    return total;
}

// q^maj t^coinv times (1-t)/(1-q^{leg+1} t^{arm+1}) over the unrestricted
// boxes.
inline QTRational tableau_weight(const QueueTableau& T) {
    QTRational w(QTPoly::one().shifted(tableau_maj(T), tableau_coinv(T)));
    for (int k = 0; k < T.n; ++k)
        for (int j = 1; j <= T.lambda[k]; ++j) {
            if (T.restricted(k, j)) continue;
            w *= QTRational(QTPoly::factor({0, 1}),
                            {QTFactor{tableau_leg(T, k, j) + 1, tableau_arm(T, k, j) + 1}});
        }
    return w;
}

// x_1^{m_1} ... x_n^{m_n} with m_i the number of boxes holding column i.
inline XMonomial tableau_monomial(const QueueTableau& T) {
    XMonomial m(T.n, 0);
    for (int k = 0; k < T.n; ++k)
        for (int j = 1; j <= T.lambda[k]; ++j) ++m[T.entry(k, j)];
    return m;
}

// Reads each ball chain bottom-up and writes its column trace into the
// tableau column whose basement is the chain's starting column.
inline QueueTableau tab_bijection(const MultilineQueue& q) {
    const Composition mu = q.type();
    QueueTableau T;
    T.n = q.system.n;
    T.lambda = sorted_type(mu);
    T.basement = tableau_basement(mu);
    T.columns.resize(T.n);
    if (q.system.L == 0) return T;

    std::vector<std::map<int, int>> up(q.system.L + 1);  // lower col -> its upper partner
    for (int r = 2; r <= q.system.L; ++r)
        for (const auto& [c, c2] : q.matching[r]) up[r][c2] = c;
    std::vector<int> column_of(T.n, -1);
    for (int k = 0; k < T.n; ++k) column_of[T.basement[k]] = k;

    for (const auto& [c, label] : q.labels[1]) {
        const int k = column_of[c];
        T.columns[k].assign(label, -1);
        int cur = c;
        for (int r = 1; r <= label; ++r) {
            T.columns[k][r - 1] = cur;
            if (r < label) cur = up[r + 1].at(cur);
        }
    }
    return T;
}

// Sum of wt(T) x^T over all fillings of type mu. Equals F(mu).
inline XPolynomial tableau_sum(const Composition& mu) {
    check_composition(mu);
    XPolynomial out = XPolynomial::zero(static_cast<int>(mu.size()));
    for (const auto& T : enumerate_qt(mu))
        out += XPolynomial::monomial(tableau_monomial(T), tableau_weight(T));
    return out;
}

}  // namespace mlq
