#pragma once
// Generalized two-line queues: the bottom two rows of a taller queue with the
// original ball labels kept. The top row carries labels in {0, 2, 3, ...}
// (nothing in a second row can start a label-1 chain), the bottom row is the
// type the pairing must realize, and the weight machinery is the same
// audited boundary pass the full queues use.
//
// wt(Q0) = wt_qt(Q0) * prod_{mu_i > 0} x_i, so the bottom row alone carries
// the x-weight. Peeling one row off a queue multiplies weights:
//   F_mu = sum_lambda two_line_F(mu, lambda) * F_{lambda^-},
// summing over rearrangements lambda of mu's labels >= 2 (zeros elsewhere),
// with lambda^-_i = max(lambda_i - 1, 0).

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mlq/composition.hpp"
#include "mlq/errors.hpp"
#include "mlq/mlq.hpp"
#include "mlq/qt_ring.hpp"
#include "mlq/xpoly.hpp"

namespace mlq {

struct TwoLineQueue {
    int n = 0;
    Composition top;               // 0 or labels >= 2
    Composition bottom;            // realized type, entries >= 0
    std::map<int, int> pairing;    // top column -> bottom column
    std::vector<PairingEvent> events;

    friend bool operator==(const TwoLineQueue& a, const TwoLineQueue& b) {
        return a.n == b.n && a.top == b.top && a.bottom == b.bottom && a.pairing == b.pairing;
    }
    friend bool operator<(const TwoLineQueue& a, const TwoLineQueue& b) {
        return std::tie(a.top, a.bottom, a.pairing) < std::tie(b.top, b.bottom, b.pairing);
    }
};

inline QTRational wt_qt(const TwoLineQueue& q) {
    QTRational w(1);
    for (const auto& e : q.events) w *= event_weight(e);
    return w;
}

// All generalized two-line queues with the given bottom and top rows, sorted.
// Empty when the rows are incompatible: a 1 in the top row, or mismatched
// per-label counts, or no pairing the matching procedure can produce.
inline std::vector<TwoLineQueue> enumerate_two_line(const Composition& mu,
                                                    const Composition& lambda) {
    check_composition(mu);
    check_composition(lambda);
    if (mu.size() != lambda.size())
        throw MismatchedArity("rows differ in length: " + composition_str(mu) + " vs " +
                              composition_str(lambda));
    const int n = static_cast<int>(mu.size());
    std::vector<TwoLineQueue> out;
    for (int v : lambda)
        if (v == 1) return out;
    std::map<int, int> top_counts;
    std::map<int, int> bottom_counts;
    for (int j = 0; j < n; ++j) {
        if (lambda[j] >= 2) ++top_counts[lambda[j]];
        if (mu[j] >= 2) ++bottom_counts[mu[j]];
    }
    if (top_counts != bottom_counts) return out;

    std::map<int, int> upper;
    for (int j = 0; j < n; ++j)
        if (lambda[j] >= 2) upper[j] = lambda[j];
    std::vector<int> lower;
    for (int j = 0; j < n; ++j)
        if (mu[j] >= 1) lower.push_back(j);

    detail::for_each_boundary_pairing(
        upper, lower, [&](int label, int target) { return mu[target] == label; },
        [&](const std::map<int, int>& pairing) {
            std::vector<PairingEvent> events;
            detail::audit_boundary(2, n, upper, lower, pairing, &events);
            out.push_back({n, lambda, mu, pairing, std::move(events)});
        });
    std::sort(out.begin(), out.end());
    return out;
}

// Total q,t-weight of the queue set, without the x factor. This is the right
// object for identities that rotate or permute the bottom row, since those
// move the x support around.
inline QTRational two_line_coeff(const Composition& mu, const Composition& lambda) {
    QTRational sum(0);
    for (const auto& q : enumerate_two_line(mu, lambda)) sum += wt_qt(q);
    return sum;
}

// Generating polynomial of the queue set: two_line_coeff times the bottom
// row's support monomial.
inline XPolynomial two_line_F(const Composition& mu, const Composition& lambda) {
    const int n = static_cast<int>(mu.size());
    QTRational c = two_line_coeff(mu, lambda);
    XPolynomial out = XPolynomial::zero(n);
    if (c.is_zero()) return out;
    XMonomial m(n, 0);
    for (int j = 0; j < n; ++j)
        if (mu[j] > 0) m[j] = 1;
    out.add_term(std::move(m), c);
    return out;
}

// The top rows lambda for which two_line_F(mu, .) can be nonzero: all
// distinct placements of mu's labels >= 2, zeros elsewhere.
inline std::vector<Composition> two_line_tops(const Composition& mu) {
    Composition base(mu.size(), 0);
    int k = 0;
    for (int v : mu)
        if (v >= 2) base[k++] = v;
    std::sort(base.begin(), base.end(), std::greater<>());
    return rearrangements(base);
}

}  // namespace mlq
