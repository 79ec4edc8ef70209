#pragma once
// Matrix-product construction of the weight polynomials. Each queue column
// contributes one operator on a tensor product of occupation ladders; the
// trace of the column product against a diagonal twist reproduces F_mu up to
// an overall factor that depends only on the sorted type.
//
// Ladder layout. For largest part L there is one ladder slot per pair
// (level, class) with 2 <= class <= level <= L, ordered with levels
// descending and classes ascending inside a level. Level ell peels one row
// off the queue: its bottom-row labels are the original labels minus
// (L - ell). A column whose bottom label at the current level is J and whose
// label directly above is M acts on the level's slots as
//
//   J = 0, M = 0:            identity everywhere
//   J = 0, M >= 2:           raise slot M
//   J = 1, M = 0:            count slot occupation everywhere (class-1 balls
//                            below stay free for every higher class)
//   J >= 2, M = 0:           lower slot J, count slots above J
//   J >= 2, M = J:           identity through slot J - 1, count above J
//   2 <= M < J:              raise slot M, lower slot J, count above J
//   anything else:           zero (an M > J ball above J breaks validity,
//                            and M = 1 cannot sit above the bottom row)
//
// and passes max(M - 1, 0) down as the bottom label for the next level.
// Raising an occupation w costs nothing, lowering it weighs (1 - t^w) read
// on the state BEFORE the step, and counting weighs t^w. Each level with a
// nonzero bottom label contributes one factor x_i. The twist weighs
// q^((c-1) w) on a slot of class c, so windings of the occupation ladders
// converge to geometric factors 1/(1 - q^(c-1) t^k).

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "composition.hpp"
#include "errors.hpp"
#include "qt_ring.hpp"
#include "ratfunc.hpp"
#include "xpoly.hpp"

namespace mlq {

// ---------------------------------------------------------------------------
// Truncated ladder operators.

// Sparse square matrix over n-variable polynomials; row index = state before,
// column index = state after, so column operators compose left to right.
class TruncOp {
  public:
    TruncOp(int dim, int arity) : dim_(dim), arity_(arity), rows_(dim) {
        if (dim < 1) throw IndexOutOfRange("operator dimension must be positive");
    }

    int dim() const { return dim_; }
    int arity() const { return arity_; }
    const std::map<int, XPolynomial>& row(int i) const { return rows_[i]; }

    void add(int i, int j, const XPolynomial& v) {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw IndexOutOfRange("operator entry out of range");
        auto it = rows_[i].find(j);
        if (it == rows_[i].end()) {
            if (!v.terms().empty()) rows_[i].emplace(j, v);
        } else {
            it->second += v;
            if (it->second.terms().empty()) rows_[i].erase(it);
        }
    }

    XPolynomial entry(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? XPolynomial::zero(arity_) : it->second;
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (!r.empty()) return false;
        return true;
    }

    static TruncOp zero(int dim, int arity) { return TruncOp(dim, arity); }

    static TruncOp identity(int dim, int arity) {
        TruncOp op(dim, arity);
        for (int i = 0; i < dim; ++i) op.add(i, i, XPolynomial::one(arity));
        return op;
    }

    // Diagonal t^w.
    static TruncOp count(int dim, int arity) {
        TruncOp op(dim, arity);
        for (int w = 0; w < dim; ++w)
            op.add(w, w, XPolynomial::constant(arity, QTRational(1).times_monomial(0, w)));
        return op;
    }

    // Raise w -> w + 1 with weight 1. Transitions leaving the truncation
    // window are dropped; the trace certificate accounts for the loss.
    static TruncOp raise(int dim, int arity) {
        TruncOp op(dim, arity);
        for (int w = 0; w + 1 < dim; ++w) op.add(w, w + 1, XPolynomial::one(arity));
        return op;
    }

    // Lower w -> w - 1 with weight (1 - t^w) on the state before the step.
    static TruncOp lower(int dim, int arity) {
        TruncOp op(dim, arity);
        for (int w = 1; w < dim; ++w) {
            QTPoly c = QTPoly::one() - QTPoly::monomial(0, w);
            op.add(w, w - 1, XPolynomial::constant(arity, QTRational(c)));
        }
        return op;
    }

    // Diagonal q^(k w).
    static TruncOp twist(int dim, int arity, int k) {
        TruncOp op(dim, arity);
        for (int w = 0; w < dim; ++w)
            op.add(w, w, XPolynomial::constant(arity, QTRational(1).times_monomial(k * w, 0)));
        return op;
    }

    friend TruncOp operator+(const TruncOp& a, const TruncOp& b) {
        if (a.dim_ != b.dim_ || a.arity_ != b.arity_)
            throw MismatchedArity("operator shape mismatch in addition");
        TruncOp r = a;
        for (int i = 0; i < b.dim_; ++i)
            for (const auto& [j, v] : b.rows_[i]) r.add(i, j, v);
        return r;
    }

    friend TruncOp operator*(const TruncOp& a, const TruncOp& b) {
        if (a.dim_ != b.dim_ || a.arity_ != b.arity_)
            throw MismatchedArity("operator shape mismatch in product");
        TruncOp r(a.dim_, a.arity_);
        for (int i = 0; i < a.dim_; ++i)
            for (const auto& [k, u] : a.rows_[i])
                for (const auto& [j, v] : b.rows_[k]) r.add(i, j, u * v);
        return r;
    }

    TruncOp scaled(const XPolynomial& c) const {
        TruncOp r(dim_, arity_);
        for (int i = 0; i < dim_; ++i)
            for (const auto& [j, v] : rows_[i]) r.add(i, j, v * c);
        return r;
    }

    friend bool operator==(const TruncOp& a, const TruncOp& b) {
        if (a.dim_ != b.dim_ || a.arity_ != b.arity_) return false;
        for (int i = 0; i < a.dim_; ++i) {
            if (a.rows_[i].size() != b.rows_[i].size()) return false;
            for (const auto& [j, v] : a.rows_[i]) {
                auto it = b.rows_[i].find(j);
                if (it == b.rows_[i].end() || !(it->second == v)) return false;
            }
        }
        return true;
    }

    friend TruncOp kron(const TruncOp& a, const TruncOp& b) {
        if (a.arity_ != b.arity_) throw MismatchedArity("arity mismatch in tensor product");
        const std::int64_t dim = static_cast<std::int64_t>(a.dim_) * b.dim_;
        if (dim > 1 << 15) throw IndexOutOfRange("tensor space too large to materialize");
        TruncOp r(static_cast<int>(dim), a.arity_);
        for (int i = 0; i < a.dim_; ++i)
            for (const auto& [j, u] : a.rows_[i])
                for (int k = 0; k < b.dim_; ++k)
                    for (const auto& [l, v] : b.rows_[k])
                        r.add(i * b.dim_ + k, j * b.dim_ + l, u * v);
        return r;
    }

  private:
    int dim_;
    int arity_;
    std::vector<std::map<int, XPolynomial>> rows_;
};

namespace ansatz_detail {

// Valid labels directly above a bottom-row label J at a level with `level`
// classes: nothing, or a strictly lower class ball of class >= 2, or J's own
// trivial partner. Above an empty cell any class may pass through.
inline std::vector<int> upper_options(int J, int level) {
    std::vector<int> ms{0};
    if (J == 0) {
        for (int m = 2; m <= level; ++m) ms.push_back(m);
    } else if (J >= 2) {
        for (int m = 2; m <= J; ++m) ms.push_back(m);
    }
    return ms;
}

}  // namespace ansatz_detail

// Column action of a level with `level` classes, bottom label J, upper label
// M, on the level's ladder slots (classes 2..level, ascending). Zero when the
// pair (J, M) cannot occur in a valid queue.
inline TruncOp ansatz_a(int J, int M, int level, int d, int arity) {
    const int slots = level - 1;
    const auto I = [&] { return TruncOp::identity(d, arity); };
    std::vector<TruncOp> fs;
    fs.reserve(slots);
    bool valid = true;
    if (J == 0 && M == 0) {
        for (int s = 0; s < slots; ++s) fs.push_back(I());
    } else if (J == 0 && M >= 2 && M <= level) {
        for (int c = 2; c <= level; ++c)
            fs.push_back(c == M ? TruncOp::raise(d, arity) : I());
    } else if (J == 1 && M == 0) {
        for (int s = 0; s < slots; ++s) fs.push_back(TruncOp::count(d, arity));
    } else if (J >= 2 && M == 0) {
        for (int c = 2; c <= level; ++c)
            fs.push_back(c < J ? I() : (c == J ? TruncOp::lower(d, arity) : TruncOp::count(d, arity)));
    } else if (J >= 2 && M == J) {
        for (int c = 2; c <= level; ++c)
            fs.push_back(c <= J ? I() : TruncOp::count(d, arity));
    } else if (J >= 2 && M >= 2 && M < J) {
        for (int c = 2; c <= level; ++c) {
            if (c == M)
                fs.push_back(TruncOp::raise(d, arity));
            else if (c == J)
                fs.push_back(TruncOp::lower(d, arity));
            else if (c > J)
                fs.push_back(TruncOp::count(d, arity));
            else
                fs.push_back(I());
        }
    } else {
        valid = false;
    }

    std::int64_t dim = 1;
    for (int s = 0; s < slots; ++s) dim *= d;
    if (dim > 1 << 15) throw IndexOutOfRange("tensor space too large to materialize");
    if (!valid) return TruncOp::zero(static_cast<int>(dim), arity);
    if (fs.empty()) return TruncOp::identity(1, arity);
    TruncOp r = fs.front();
    for (size_t s = 1; s < fs.size(); ++s) r = kron(r, fs[s]);
    return r;
}

// Column operator for bottom label J on the full slot tower of L levels,
// built by descending the levels and passing max(M - 1, 0) down. var is the
// 1-based column variable decorating every level with a nonzero bottom label.
inline TruncOp ansatz_X(int J, int L, int var, int d, int arity) {
    if (L < 1 || J < 0 || J > L) throw IndexOutOfRange("label out of range for level count");
    const XPolynomial xdec = XPolynomial::x(arity, var);
    if (L == 1) {
        TruncOp r = TruncOp::identity(1, arity);
        return J > 0 ? r.scaled(xdec) : r;
    }
    std::int64_t dim = 1;
    for (int l = 2; l <= L; ++l)
        for (int c = 2; c <= l; ++c) dim *= d;
    if (dim > 1 << 15) throw IndexOutOfRange("tensor space too large to materialize");
    TruncOp sum = TruncOp::zero(static_cast<int>(dim), arity);
    for (int M : ansatz_detail::upper_options(J, L)) {
        TruncOp a = ansatz_a(J, M, L, d, arity);
        if (J > 0) a = a.scaled(xdec);
        sum = sum + kron(a, ansatz_X(std::max(M - 1, 0), L - 1, var, d, arity));
    }
    return sum;
}

// Diagonal twist: q^(c-1) per unit of occupation on every slot of class c.
inline TruncOp ansatz_S(int L, int d, int arity) {
    TruncOp r = TruncOp::identity(1, arity);
    for (int l = L; l >= 2; --l)
        for (int c = 2; c <= l; ++c) r = kron(r, TruncOp::twist(d, arity, c - 1));
    return r;
}

// Raw trace of the column product against the twist at truncation d. Exact
// only in low q-orders; see trace_certified for the guarantee.
inline XPolynomial trace_raw(const Composition& mu, int d) {
    check_composition(mu);
    const int n = static_cast<int>(mu.size());
    const int L = largest_part(mu);
    if (L == 0) return XPolynomial::one(n);
    if (d < 1) throw IndexOutOfRange("truncation dimension must be positive");

    std::int64_t dim64 = 1;
    for (int l = 2; l <= L; ++l)
        for (int c = 2; c <= l; ++c) dim64 *= d;
    if (dim64 > 1 << 15) throw IndexOutOfRange("tensor space too large to materialize");
    const int dim = static_cast<int>(dim64);

    std::vector<TruncOp> cols;
    cols.reserve(mu.size());
    for (int i = 0; i < n; ++i) cols.push_back(ansatz_X(mu[i], L, i + 1, d, n));
    const TruncOp S = ansatz_S(L, d, n);

    // Propagate a sparse row vector from each diagonal start state; the twist
    // is diagonal so only the returning amplitude matters.
    XPolynomial acc = XPolynomial::zero(n);
    for (int w0 = 0; w0 < dim; ++w0) {
        std::map<int, XPolynomial> vec;
        vec.emplace(w0, XPolynomial::one(n));
        for (const auto& X : cols) {
            std::map<int, XPolynomial> next;
            for (const auto& [i, amp] : vec)
                for (const auto& [j, v] : X.row(i)) {
                    auto it = next.find(j);
                    if (it == next.end())
                        next.emplace(j, amp * v);
                    else
                        it->second += amp * v;
                }
            vec = std::move(next);
            if (vec.empty()) break;
        }
        auto it = vec.find(w0);
        if (it != vec.end()) acc += it->second * S.entry(w0, w0);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// q-order bookkeeping for the truncation certificate.

// Geometric expansion of a coefficient as a q-series, keeping terms of
// q-degree <= qdeg. Denominator factors must carry a positive q-power.
inline QTPoly q_expand(const QTRational& r, int qdeg) {
    QTPoly p = r.num().truncated_q(qdeg + 1);
    for (const auto& f : r.den()) {
        if (f.a == 0)
            throw NotDivisible("factor (" + factor_str(f) + ") has no q-series inverse here");
        QTPoly geo;
        for (int j = 0; j * f.a <= qdeg; ++j)
            geo += QTPoly::monomial(j * f.a, j * f.b);
        p = (p * geo).truncated_q(qdeg + 1);
    }
    return p;
}

// Drop everything of q-degree > qdeg, expanding rational coefficients into
// their q-series first so both exact and truncated routes land on the same
// canonical form.
inline XPolynomial truncate_q(const XPolynomial& f, int qdeg) {
    XPolynomial r = XPolynomial::zero(f.n());
    for (const auto& [m, c] : f.terms()) {
        QTPoly p = q_expand(c, qdeg);
        if (!p.is_zero()) r.add_term(m, QTRational(p));
    }
    return r;
}

struct TruncatedTrace {
    XPolynomial series;  // the trace, exact through q-degree qdeg
    int qdeg;            // certified q-order
    int d;               // truncation dimension used
};

// Certified trace. Any trajectory lost to the truncation window at dimension
// d must wind some ladder past occupation d - 1; the raising steps add at
// most one unit per column, so the winding base is at least d - n and the
// twist puts the lost weight at q-degree >= d - n. Degrees <= d - n - 1 are
// therefore exact, and the d, d+1, d+2 recomputation checks the bound.
inline TruncatedTrace trace_certified(const Composition& mu, int d = 0) {
    check_composition(mu);
    const int n = static_cast<int>(mu.size());
    if (d == 0) d = n + 2;
    const int qdeg = d - n - 1;
    if (qdeg < 0)
        throw TruncationUnstable("dimension " + std::to_string(d) +
                                 " certifies no q-order for " + std::to_string(n) +
                                 " columns; raise d");
    XPolynomial base = truncate_q(trace_raw(mu, d), qdeg);
    for (int dd = d + 1; dd <= d + 2; ++dd) {
        if (!(truncate_q(trace_raw(mu, dd), qdeg) == base))
            throw TruncationUnstable("trace at dimensions " + std::to_string(d) + ".." +
                                     std::to_string(dd) + " disagrees below q-order " +
                                     std::to_string(qdeg + 1));
    }
    return TruncatedTrace{std::move(base), qdeg, d};
}

// ---------------------------------------------------------------------------
// Exact trace via per-slot winding sums.
//
// The generator word each ladder slot sees depends only on the chain choices
// per column, never on the occupations, so the trace factorizes over slots
// once the chains are fixed. Windings below the slot's excursion bound are
// summed explicitly; the remaining tail is geometric because every raising
// and counting weight gains one uniform power of t per extra winding, giving
// 1/(1 - q^(c-1) t^k) with k the number of such gains along the cycle.

namespace ansatz_detail {

struct Slot {
    int level;
    int cls;
    int cap;  // max raises the slot can see = multiplicity of the matching part
};

enum class Act : unsigned char { none, raise, lower, cnt };

// Per-column chain: action per slot plus the x-degree of the column.
struct Chain {
    std::vector<Act> acts;
    int xdeg = 0;
};

inline void collect_chains(int J, int level, const std::vector<Slot>& slots,
                           std::vector<Act>& acts, int xdeg, std::vector<Chain>& out) {
    if (level == 1) {
        out.push_back(Chain{acts, xdeg + (J > 0 ? 1 : 0)});
        return;
    }
    int base = 0;
    while (base < static_cast<int>(slots.size()) && slots[base].level != level) ++base;
    for (int M : upper_options(J, level)) {
        std::vector<Act> next = acts;
        auto at = [&](int c) -> Act& { return next[base + (c - 2)]; };
        if (J == 0 && M >= 2) {
            at(M) = Act::raise;
        } else if (J == 1) {
            for (int c = 2; c <= level; ++c) at(c) = Act::cnt;
        } else if (J >= 2) {
            if (M >= 2 && M < J) at(M) = Act::raise;
            if (M == 0 || M < J) at(J) = Act::lower;
            for (int c = J + 1; c <= level; ++c) at(c) = Act::cnt;
        }
        collect_chains(std::max(M - 1, 0), level - 1, slots, next, xdeg + (J > 0 ? 1 : 0), out);
    }
}

}  // namespace ansatz_detail

// Exact trace as a polynomial in x with rational q,t coefficients; equals
// F_mu up to one factor depending only on the sorted type.
inline XPolynomial trace_exact(const Composition& mu) {
    using namespace ansatz_detail;
    check_composition(mu);
    const int n = static_cast<int>(mu.size());
    const int L = largest_part(mu);
    if (L == 0) return XPolynomial::one(n);
    const Composition lambda = sorted_type(mu);

    auto mult = [&](int part) {
        int m = 0;
        for (int v : lambda)
            if (v == part) ++m;
        return m;
    };

    std::vector<Slot> slots;
    for (int l = L; l >= 2; --l)
        for (int c = 2; c <= l; ++c) slots.push_back(Slot{l, c, mult(c + L - l)});
    const int S = static_cast<int>(slots.size());

    // Chains available per column value.
    std::map<int, std::vector<Chain>> chains;
    for (int v : mu) {
        if (chains.count(v)) continue;
        std::vector<Chain> cs;
        std::vector<Act> acts(S, Act::none);
        collect_chains(v, L, slots, acts, 0, cs);
        chains.emplace(v, std::move(cs));
    }

    // Winding modes: per slot either a concrete base 0 <= W < cap, or the
    // geometric tail starting at cap.
    std::vector<int> mode(S, 0);  // 0..cap-1 concrete, == cap means tail
    XPolynomial total = XPolynomial::zero(n);

    // Transfer state per slot: concrete -> current occupation; tail ->
    // (offset from the base, powers of the winding variable collected).
    struct State {
        std::vector<int> v;
        bool operator<(const State& o) const { return v < o.v; }
    };

    while (true) {
        // Initial state and the twist prefactor of this mode.
        State init;
        QTRational pre(1);
        for (int s = 0; s < S; ++s) {
            const int k = slots[s].cls - 1;
            if (mode[s] < slots[s].cap) {
                init.v.push_back(mode[s]);
                pre = pre.times_monomial(k * mode[s], 0);
            } else {
                init.v.push_back(0);  // offset
                init.v.push_back(0);  // winding-variable power
                pre = pre.times_monomial(k * slots[s].cap, 0);
            }
        }

        std::map<State, XPolynomial> cur;
        cur.emplace(init, XPolynomial::constant(n, pre));

        for (int i = 0; i < n; ++i) {
            std::map<State, XPolynomial> next;
            const XPolynomial xi = XPolynomial::x(n, i + 1);
            for (const Chain& ch : chains.at(mu[i])) {
                XPolynomial colx = XPolynomial::one(n);
                for (int e = 0; e < ch.xdeg; ++e) colx *= xi;
                for (const auto& [st, amp] : cur) {
                    // Apply the chain slot by slot; tail lowering branches.
                    std::vector<std::pair<State, QTRational>> branch{{st, QTRational(1)}};
                    bool dead = false;
                    int pos = 0;
                    for (int s = 0; s < S && !dead; ++s) {
                        const Act a = ch.acts[s];
                        const int cap = slots[s].cap;
                        if (mode[s] < cap) {
                            // Concrete occupation at index pos.
                            for (auto& [bs, bw] : branch) {
                                int& w = bs.v[pos];
                                switch (a) {
                                    case Act::none:
                                        break;
                                    case Act::raise:
                                        ++w;
                                        break;
                                    case Act::cnt:
                                        bw = bw.times_monomial(0, w);
                                        break;
                                    case Act::lower:
                                        if (w == 0) {
                                            dead = true;
                                        } else {
                                            QTPoly f = QTPoly::one() - QTPoly::monomial(0, w);
                                            bw = bw * QTRational(f);
                                            --w;
                                        }
                                        break;
                                }
                                if (dead) break;
                            }
                            pos += 1;
                        } else {
                            // Tail slot: occupation = cap + offset + p.
                            std::vector<std::pair<State, QTRational>> grown;
                            for (auto& [bs, bw] : branch) {
                                int& off = bs.v[pos];
                                int& kp = bs.v[pos + 1];
                                switch (a) {
                                    case Act::none:
                                        grown.emplace_back(bs, bw);
                                        break;
                                    case Act::raise:
                                        ++off;
                                        grown.emplace_back(bs, bw);
                                        break;
                                    case Act::cnt:
                                        bw = bw.times_monomial(0, cap + off);
                                        ++kp;
                                        grown.emplace_back(bs, bw);
                                        break;
                                    case Act::lower: {
                                        // (1 - t^(cap+off) t^p): keep both terms.
                                        State s1 = bs;
                                        s1.v[pos] -= 1;
                                        grown.emplace_back(s1, bw);
                                        State s2 = bs;
                                        QTRational w2 =
                                            bw.times_monomial(0, cap + off, BigRat(-1));
                                        s2.v[pos] -= 1;
                                        s2.v[pos + 1] += 1;
                                        grown.emplace_back(s2, w2);
                                        break;
                                    }
                                }
                            }
                            branch = std::move(grown);
                            pos += 2;
                        }
                    }
                    if (dead) continue;
                    for (auto& [bs, bw] : branch) {
                        XPolynomial contrib = (amp * colx).scaled(bw);
                        if (contrib.terms().empty()) continue;
                        auto it = next.find(bs);
                        if (it == next.end())
                            next.emplace(std::move(bs), std::move(contrib));
                        else
                            it->second += contrib;
                    }
                }
            }
            cur = std::move(next);
            if (cur.empty()) break;
        }

        // Close the cycle: concrete slots must return to their base, tail
        // offsets must vanish; each tail then sums to a geometric factor.
        for (const auto& [st, amp] : cur) {
            bool ok = true;
            int pos = 0;
            QTRational tail(1);
            for (int s = 0; s < S && ok; ++s) {
                if (mode[s] < slots[s].cap) {
                    ok = st.v[pos] == mode[s];
                    pos += 1;
                } else {
                    ok = st.v[pos] == 0;
                    if (ok) tail = tail.over(QTFactor{slots[s].cls - 1, st.v[pos + 1]});
                    pos += 2;
                }
            }
            if (ok) total += amp.scaled(tail);
        }

        // Next mode.
        int s = 0;
        while (s < S && mode[s] == slots[s].cap) mode[s++] = 0;
        if (s == S) break;
        ++mode[s];
    }
    return total;
}

// All traces for the rearrangement class of a partition, exact route.
inline std::map<Composition, XPolynomial> trace_family(const Composition& lambda) {
    if (!is_partition(lambda)) throw MismatchedArity("expected a partition");
    std::map<Composition, XPolynomial> out;
    for (const auto& mu : rearrangements(lambda)) out.emplace(mu, trace_exact(mu));
    return out;
}

// ---------------------------------------------------------------------------
// q = 1 bridge. The trace carries poles at q = 1 that cancel only in ratios,
// so coefficients are rebuilt as rational functions in q at a fixed t.

inline RatFuncT ratfunc_in_q(const QTRational& r, const BigRat& t0) {
    PolyT num;
    for (const auto& [e, c] : r.num().terms()) {
        std::vector<BigRat> v(e.dq + 1, BigRat(0));
        v[e.dq] = c * pow_bigrat(t0, e.dt);
        num = num + PolyT(std::move(v));
    }
    RatFuncT out{num};
    for (const auto& f : r.den()) {
        std::vector<BigRat> dv(f.a + 1, BigRat(0));
        dv[0] = 1;
        dv[f.a] -= pow_bigrat(t0, f.b);
        out = out / RatFuncT(PolyT(std::move(dv)));
    }
    return out;
}

// x = (1,...,1) collapse with q left symbolic and t fixed.
inline RatFuncT trace_profile_q(const XPolynomial& f, const BigRat& t0) {
    RatFuncT acc(0);
    for (const auto& [m, c] : f.terms()) {
        (void)m;
        acc = acc + ratfunc_in_q(c, t0);
    }
    return acc;
}

}  // namespace mlq
