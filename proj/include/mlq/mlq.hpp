#pragma once

// Multiline queues: cylindric ball systems with a pairing between consecutive
// rows, the labeling/audit procedure that assigns each ball the row its chain
// starts in, the (q,t)-weight read off the pairing events, exhaustive
// enumeration by type, and a row-by-row dynamic program that computes the
// weight generating polynomials for every type of a given shape at once.
//
// Conventions: rows are numbered 1..L bottom to top; columns are 0-based
// internally and cyclic mod n (serialization renders them 1-based). A ball in
// rows 2..L is matched to a ball one row below, straight down or cyclically
// rightward. The matching procedure works down the label classes at each
// boundary: every ball of the current class sitting directly above a
// still-free ball must take the straight-down pair ("trivial", weight 1)
// before the rest of the class picks partners among the remaining free balls.
// Equivalently, each ball's label is strictly smaller than the label directly
// beneath it unless the two form a straight-down pair. Pair weights are then
// read off in decreasing label order, right to left within a label; a pair's
// weight depends on how many lower-row balls are still free at that moment,
// where trivially paired balls never count as free.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mlq/composition.hpp"
#include "mlq/xpoly.hpp"

namespace mlq {

struct PairingEvent {
    int row = 0;       // boundary row r: the upper ball lives in row r
    int label = 0;     // chain label i of the pair
    int from_col = 0;  // upper ball column c
    int to_col = 0;    // lower ball column c'
    int skipped = 0;   // free lower-row balls strictly between c and c', cyclically rightward
    int free_count = 0;  // free lower-row balls at the moment of pairing (target included)
    bool wrapped = false;  // the strand passes the seam: c' < c
    bool trivial = false;  // straight down: c' = c

    friend bool operator==(const PairingEvent&, const PairingEvent&) = default;
};

// Occupied columns per row; rows[r-1] is row r, sorted ascending.
struct BallSystem {
    int L = 0;
    int n = 1;
    std::vector<std::vector<int>> rows;

    void validate() const {
        if (n < 1) throw MismatchedArity("ball system needs n >= 1");
        if (static_cast<int>(rows.size()) != L) throw MismatchedArity("row count mismatch");
        for (int r = 1; r <= L; ++r) {
            const auto& row = rows[r - 1];
            if (!std::is_sorted(row.begin(), row.end()) ||
                std::adjacent_find(row.begin(), row.end()) != row.end())
                throw MismatchedArity("row columns must be sorted and distinct");
            for (int c : row)
                if (c < 0 || c >= n) throw IndexOutOfRange("ball column out of range");
            if (r >= 2 && rows[r - 1].size() > rows[r - 2].size())
                throw MismatchedArity("row ball counts must weakly increase downward");
        }
        if (L > 0 && rows[L - 1].empty()) throw MismatchedArity("top row must be nonempty");
    }

    bool occupied(int r, int c) const {
        const auto& row = rows[r - 1];
        return std::binary_search(row.begin(), row.end(), c);
    }
};

// matching[r] maps the column of each row-r ball to its partner column in row
// r-1, for r in 2..L (index 0, 1 unused). labels[r] maps column -> label.
using Matching = std::vector<std::map<int, int>>;
using Labels = std::vector<std::map<int, int>>;

namespace detail {

// Audits one row boundary r given the upper row's labels and the lower row's
// occupancy. Label classes are visited in decreasing order; when a class's
// turn comes, its straight-down pairs claim their balls first, then the rest
// of the class pairs right-to-left. Lower balls stay in the free pool until
// claimed, so an earlier (higher-label) pairing counts a later class's
// straight-down partner as free and may skip over it. A ball may pass over an
// occupied position directly beneath it only when a strictly higher label
// claims that ball; otherwise the straight-down pairing is mandatory. Emits
// events in visit order and returns the induced labels of the matched lower
// balls.
inline std::map<int, int> audit_boundary(int r, int n, const std::map<int, int>& upper_labels,
                                         const std::vector<int>& lower_cols,
                                         const std::map<int, int>& pairing,
                                         std::vector<PairingEvent>* events) {
    if (pairing.size() != upper_labels.size())
        throw InvalidMatching("every upper ball needs exactly one partner");
    std::set<int> lower(lower_cols.begin(), lower_cols.end());
    for (const auto& [c, c2] : pairing) {
        if (upper_labels.find(c) == upper_labels.end())
            throw InvalidMatching("pairing source is not a ball");
        if (lower.find(c2) == lower.end()) throw InvalidMatching("pairing target is not a ball");
    }
    std::map<int, int> matcher_label;  // lower col -> label of the ball that took it
    for (const auto& [c, c2] : pairing) matcher_label[c2] = upper_labels.at(c);
    if (matcher_label.size() != pairing.size())
        throw InvalidMatching("two balls share a partner");

    std::vector<std::pair<int, int>> order;  // (col, label): label desc, trivial first, col desc
    order.reserve(upper_labels.size());
    for (const auto& [c, lab] : upper_labels) order.emplace_back(c, lab);
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        const bool ta = pairing.at(a.first) == a.first;
        const bool tb = pairing.at(b.first) == b.first;
        if (ta != tb) return ta;
        return a.first > b.first;
    });

    std::set<int> matched;  // lower balls no longer free
    std::map<int, int> lower_labels;
    for (const auto& [c, label] : order) {
        int c2 = pairing.at(c);
        if (c == c2) {
            matched.insert(c2);
            events->push_back({r, label, c, c2, 0, 0, false, true});
            lower_labels[c] = label;
            continue;
        }
        if (lower.count(c)) {
            auto below = matcher_label.find(c);
            if (below == matcher_label.end() || below->second <= label)
                throw InvalidMatching("ball passed over its straight-down partner");
        }
        matched.insert(c2);
        int free_count = static_cast<int>(lower.size() - matched.size()) + 1;  // target is free too
        int skipped = 0;
        for (int step = 1; step < n; ++step) {
            int col = (c + step) % n;
            if (col == c2) break;
            if (lower.count(col) && !matched.count(col)) ++skipped;
        }
        events->push_back({r, label, c, c2, skipped, free_count, c2 < c, false});
        lower_labels[c2] = label;
    }
    return lower_labels;
}

}  // namespace detail

// Runs the full labeling/audit: chains reached from row L get label L, then
// every unmatched ball of a lower row starts a chain labeled by its row.
// Returns per-row labels and the ordered pairing events (top boundary first).
// InvalidMatching when the straight-down rule is violated.
inline std::pair<Labels, std::vector<PairingEvent>> label_and_audit(const BallSystem& sys,
                                                                    const Matching& matching) {
    sys.validate();
    Labels labels(sys.L + 1);
    std::vector<PairingEvent> events;
    if (sys.L == 0) return {labels, events};
    if (static_cast<int>(matching.size()) != sys.L + 1)
        throw InvalidMatching("matching must cover rows 2..L");
    for (int c : sys.rows[sys.L - 1]) labels[sys.L][c] = sys.L;
    for (int r = sys.L; r >= 2; --r) {
        std::map<int, int> inherited =
            detail::audit_boundary(r, sys.n, labels[r], sys.rows[r - 2], matching[r], &events);
        labels[r - 1] = inherited;
        for (int c : sys.rows[r - 2])
            if (!labels[r - 1].count(c)) labels[r - 1][c] = r - 1;
    }
    return {labels, events};
}

struct MultilineQueue {
    BallSystem system;
    Matching matching;
    // Derived by label_and_audit at construction time:
    Labels labels;
    std::vector<PairingEvent> events;

    MultilineQueue() = default;
    MultilineQueue(BallSystem sys, Matching m) : system(std::move(sys)), matching(std::move(m)) {
        if (static_cast<int>(matching.size()) < system.L + 1) matching.resize(system.L + 1);
        auto [lab, ev] = label_and_audit(system, matching);
        labels = std::move(lab);
        events = std::move(ev);
    }

    // Row-1 labels, 0 at empty positions.
    Composition type() const {
        Composition mu(system.n, 0);
        if (system.L == 0) return mu;
        for (const auto& [c, lab] : labels[1]) mu[c] = lab;
        return mu;
    }

    // Deterministic sort key: occupancy grid first, then the matching.
    friend bool operator<(const MultilineQueue& a, const MultilineQueue& b) {
        if (a.system.rows != b.system.rows) return a.system.rows < b.system.rows;
        return a.matching < b.matching;
    }
    friend bool operator==(const MultilineQueue& a, const MultilineQueue& b) {
        return a.system.L == b.system.L && a.system.n == b.system.n &&
               a.system.rows == b.system.rows && a.matching == b.matching;
    }
};

// x_1^{m_1} ... x_n^{m_n} with m_i the number of balls in column i.
inline XMonomial wt_x(const MultilineQueue& q) {
    XMonomial m(q.system.n, 0);
    for (const auto& row : q.system.rows)
        for (int c : row) ++m[c];
    return m;
}

inline QTRational event_weight(const PairingEvent& e) {
    if (e.trivial) return QTRational(1);
    int a = e.label - e.row + 1;
    QTPoly num = QTPoly::factor({0, 1}).shifted(e.wrapped ? a : 0, e.skipped);  // (1-t) t^s q^{a?}
    return QTRational(num, {QTFactor{a, e.free_count}});
}

// Product of the nontrivial pairing-event weights.
inline QTRational wt_qt(const MultilineQueue& q) {
    QTRational w(1);
    for (const auto& e : q.events) {
        if (e.trivial) continue;
        w *= event_weight(e);
    }
    return w;
}

// Rotates every ball one column to the right (mod n), pairings carried along.
inline MultilineQueue cyclic_shift(const MultilineQueue& q) {
    BallSystem sys;
    sys.L = q.system.L;
    sys.n = q.system.n;
    sys.rows.resize(sys.L);
    for (int r = 1; r <= sys.L; ++r) {
        for (int c : q.system.rows[r - 1]) sys.rows[r - 1].push_back((c + 1) % sys.n);
        std::sort(sys.rows[r - 1].begin(), sys.rows[r - 1].end());
    }
    Matching m(sys.L + 1);
    for (int r = 2; r <= sys.L; ++r)
        for (const auto& [c, c2] : q.matching[r]) m[r][(c + 1) % sys.n] = (c2 + 1) % sys.n;
    return MultilineQueue(std::move(sys), std::move(m));
}

namespace detail {

// Enumerates all subsets of {0..n-1} of the given size, ascending.
inline void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            f(cur);
            return;
        }
        int need = size - static_cast<int>(cur.size());
        for (int c = start; c <= n - need; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Enumerates every complete pairing of one row boundary that the matching
// procedure can produce. Label classes are processed from highest to lowest;
// before any ball of a class picks a partner, every ball of that class with a
// still-free ball directly beneath it is locked to that straight-down pair.
// The remaining balls of the class then take free partners injectively, so no
// ball can steal another ball's straight-down partner within a class.
// `allowed` can veto a (label, target) assignment early (used to filter by
// target type); a vetoed locked pair kills the whole branch.
inline void for_each_boundary_pairing(const std::map<int, int>& upper_labels,
                                      const std::vector<int>& lower_cols,
                                      const std::function<bool(int label, int target)>& allowed,
                                      const std::function<void(const std::map<int, int>&)>& f) {
    // classes[k]: (label, member columns right to left), highest label first
    std::vector<std::pair<int, std::vector<int>>> classes;
    {
        std::vector<std::pair<int, int>> order;
        for (const auto& [c, lab] : upper_labels) order.emplace_back(c, lab);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first > b.first;
        });
        for (const auto& [c, lab] : order) {
            if (classes.empty() || classes.back().first != lab) classes.push_back({lab, {}});
            classes.back().second.push_back(c);
        }
    }
    std::set<int> lower(lower_cols.begin(), lower_cols.end());
    std::map<int, int> pairing;
    std::set<int> used;
    auto do_class = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            f(pairing);
            return;
        }
        const auto& [label, cols] = classes[ci];
        std::vector<int> locked, rest;
        for (int c : cols) {
            if (lower.count(c) && !used.count(c))
                locked.push_back(c);
            else
                rest.push_back(c);
        }
        for (int c : locked)
            if (!allowed(label, c)) return;
        for (int c : locked) {
            pairing[c] = c;
            used.insert(c);
        }
        auto choose = [&](auto&& sc, size_t k) -> void {
            if (k == rest.size()) {
                self(self, ci + 1);
                return;
            }
            int c = rest[k];
            for (int c2 : lower) {
                if (used.count(c2) || !allowed(label, c2)) continue;
                pairing[c] = c2;
                used.insert(c2);
                sc(sc, k + 1);
                pairing.erase(c);
                used.erase(c2);
            }
        };
        choose(choose, 0);
        for (int c : locked) {
            pairing.erase(c);
            used.erase(c);
        }
    };
    do_class(do_class, 0);
}

inline std::vector<int> row_counts(const Composition& sorted) {
    int L = sorted.empty() ? 0 : sorted[0];
    std::vector<int> m(L + 1, 0);
    for (int r = 1; r <= L; ++r)
        for (int p : sorted)
            if (p >= r) ++m[r];
    return m;
}

}  // namespace detail

// The complete duplicate-free list of multiline queues of type mu, sorted by
// (occupancy grid, matching). The all-zero type yields the single empty queue.
inline std::vector<MultilineQueue> enumerate_mlq(const Composition& mu) {
    check_composition(mu);
    const int n = static_cast<int>(mu.size());
    const int L = largest_part(mu);
    std::vector<MultilineQueue> out;
    if (L == 0) {
        BallSystem sys;
        sys.L = 0;
        sys.n = n;
        out.emplace_back(std::move(sys), Matching{});
        return out;
    }
    const std::vector<int> m = detail::row_counts(sorted_type(mu));
    std::vector<int> row1;
    for (int c = 0; c < n; ++c)
        if (mu[c] >= 1) row1.push_back(c);

    BallSystem sys;
    sys.L = L;
    sys.n = n;
    sys.rows.assign(L, {});
    sys.rows[0] = row1;
    Matching matching(L + 1);
    Labels labels(L + 1);
    if (L == 1) {  // row 1 is the whole system, nothing to match
        out.emplace_back(std::move(sys), std::move(matching));
        return out;
    }

    // Rows are placed top-down; each boundary pairing is chosen before the
    // next row down is placed, pruning on the target type early: a lower ball
    // matched at the bottom boundary must carry exactly the label mu asks for,
    // and an unmatched row-1 ball means mu = 1 there.
    auto place = [&](auto&& self, int r) -> void {
        if (r == 1) {
            for (int c : row1)
                if (labels[1].at(c) != mu[c]) return;
            MultilineQueue q(sys, matching);
            if (q.type() == mu) out.push_back(std::move(q));
            return;
        }
        auto descend = [&](const std::vector<int>& below) {
            detail::for_each_boundary_pairing(
                labels[r], below,
                [&](int label, int target) { return r > 2 || mu[target] == label; },
                [&](const std::map<int, int>& pairing) {
                    matching[r] = pairing;
                    labels[r - 1].clear();
                    for (const auto& [c, c2] : pairing) labels[r - 1][c2] = labels[r][c];
                    for (int c : sys.rows[r - 2])
                        if (!labels[r - 1].count(c)) labels[r - 1][c] = r - 1;
                    self(self, r - 1);
                    matching[r].clear();
                });
        };
        if (r == 2) {
            descend(row1);
        } else {
            detail::for_each_subset(n, m[r - 1], [&](const std::vector<int>& below) {
                sys.rows[r - 2] = below;
                descend(below);
                sys.rows[r - 2].clear();
            });
        }
    };
    detail::for_each_subset(n, m[L], [&](const std::vector<int>& top) {
        sys.rows[L - 1] = top;
        for (int c : top) labels[L][c] = L;
        place(place, L);
        labels[L].clear();
        sys.rows[L - 1].clear();
    });
    std::sort(out.begin(), out.end());
    return out;
}

// One state of the row dynamic program: the labeled occupancy of a row
// (0 = empty, otherwise the chain label), plus the partial weight polynomial.
using LabeledRow = std::vector<int>;

// Computes the weight generating polynomial for every type of shape lambda in
// one top-down pass: process boundaries from row L downward, carrying a
// polynomial-valued distribution over labeled row configurations. Keys of the
// result are exactly the distinct rearrangements of lambda.
inline std::map<Composition, XPolynomial> weight_polynomials(const Composition& lambda_in, int n) {
    Composition lambda = sorted_type(pad_to(lambda_in, n));
    if (static_cast<int>(lambda.size()) != n)
        throw MismatchedArity("shape has more parts than variables");
    const int L = largest_part(lambda);
    std::map<Composition, XPolynomial> result;
    if (L == 0) {
        result.emplace(Composition(n, 0), XPolynomial::one(n));
        return result;
    }
    const std::vector<int> m = detail::row_counts(lambda);

    auto x_monomial = [&](const std::vector<int>& cols) {
        XMonomial mono(n, 0);
        for (int c : cols) mono[c] = 1;
        return mono;
    };

    std::map<LabeledRow, XPolynomial> cur;
    detail::for_each_subset(n, m[L], [&](const std::vector<int>& top) {
        LabeledRow cfg(n, 0);
        for (int c : top) cfg[c] = L;
        cur.emplace(std::move(cfg), XPolynomial::monomial(x_monomial(top), QTRational(1)));
    });

    for (int r = L; r >= 2; --r) {
        std::map<LabeledRow, XPolynomial> next;
        for (const auto& [cfg, val] : cur) {
            std::map<int, int> upper_labels;
            for (int c = 0; c < n; ++c)
                if (cfg[c] > 0) upper_labels[c] = cfg[c];
            detail::for_each_subset(n, m[r - 1], [&](const std::vector<int>& below) {
                XPolynomial with_row = val * XPolynomial::monomial(x_monomial(below), QTRational(1));
                detail::for_each_boundary_pairing(
                    upper_labels, below, [](int, int) { return true; },
                    [&](const std::map<int, int>& pairing) {
                        std::vector<PairingEvent> events;
                        std::map<int, int> inherited =
                            detail::audit_boundary(r, n, upper_labels, below, pairing, &events);
                        QTRational w(1);
                        for (const auto& e : events) w *= event_weight(e);
                        LabeledRow down(n, 0);
                        for (int c : below) down[c] = r - 1;
                        for (const auto& [c, lab] : inherited) down[c] = lab;
                        auto it = next.try_emplace(std::move(down), XPolynomial::zero(n)).first;
                        it->second += with_row.scaled(w);
                    });
            });
        }
        cur = std::move(next);
    }
    for (auto& [cfg, val] : cur) result.emplace(cfg, std::move(val));
    return result;
}

}  // namespace mlq
