#pragma once

// Exact multispecies exclusion process on a ring. States are the
// rearrangements of a partition; each step picks one of the n cyclically
// adjacent pairs and swaps it with probability t/n when the heavier value
// sits in front, 1/n when it sits behind. The stationary vector is computed
// by exact rational elimination, either at a fixed rational t or symbolically
// in t, and compared against the x = (1,...,1), q = 1 specialization of F.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mlq/composition.hpp"
#include "mlq/macdonald.hpp"
#include "mlq/ratfunc.hpp"
#include "mlq/rational.hpp"

namespace mlq {

struct StateSpace {
    Composition lambda;               // weakly decreasing
    std::vector<Composition> states;  // lexicographically increasing

    int index(const Composition& mu) const {
        auto it = std::lower_bound(states.begin(), states.end(), mu);
        if (it == states.end() || *it != mu) throw IndexOutOfRange("state not in the chain");
        return static_cast<int>(it - states.begin());
    }
};

inline StateSpace make_state_space(const Composition& lambda) {
    if (!is_partition(lambda)) throw MismatchedArity("state space expects weakly decreasing parts");
    StateSpace S;
    S.lambda = lambda;
    S.states = rearrangements(lambda);
    return S;
}

namespace detail {

inline bool field_is_zero(const BigRat& v) { return v == 0; }
inline bool field_is_zero(const RatFuncT& v) { return v.is_zero(); }

// Row-stochastic transition rows over any exact field. Swaps at different
// positions landing on the same state accumulate (on a 2-cycle both
// directions reach the single other state).
template <typename Field>
std::vector<std::vector<Field>> transition_rows(const StateSpace& S, const Field& t) {
    const int N = static_cast<int>(S.states.size());
    const int n = static_cast<int>(S.lambda.size());
    std::vector<std::vector<Field>> rows(N, std::vector<Field>(N, Field(0)));
    const Field inv_n = Field(1) / Field(n);
    for (int s = 0; s < N; ++s) {
        const Composition& mu = S.states[s];
        Field off(0);
        for (int k = 0; k < n; ++k) {
            const int k2 = (k + 1) % n;
            if (mu[k] == mu[k2]) continue;
            Composition nu = mu;
            std::swap(nu[k], nu[k2]);
            const Field p = mu[k] > mu[k2] ? t * inv_n : inv_n;
            rows[s][S.index(nu)] += p;
            off += p;
        }
        rows[s][s] += Field(1) - off;
    }
    return rows;
}

// Solves pi P = pi by reduced row echelon on P^T - I and returns pi scaled
// to sum 1. The columns of P^T - I always sum to zero, so the rank is at
// most N - 1; a rank below that means several closed classes.
template <typename Field>
std::vector<Field> stationary_from_rows(const std::vector<std::vector<Field>>& rows) {
    const int N = static_cast<int>(rows.size());
    std::vector<std::vector<Field>> A(N, std::vector<Field>(N, Field(0)));
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) A[r][c] = rows[c][r] - Field(r == c ? 1 : 0);

    std::vector<int> pivot_cols;
    int rank = 0;
    for (int col = 0; col < N && rank < N; ++col) {
        int piv = -1;
        for (int r = rank; r < N; ++r)
            if (!field_is_zero(A[r][col])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        const Field inv = Field(1) / A[rank][col];
        for (int c2 = col; c2 < N; ++c2) A[rank][c2] = A[rank][c2] * inv;
        for (int r = 0; r < N; ++r) {
            if (r == rank || field_is_zero(A[r][col])) continue;
            const Field f = A[r][col];
            for (int c2 = col; c2 < N; ++c2) A[r][c2] = A[r][c2] - f * A[rank][c2];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    if (rank != N - 1)
        throw NotIrreducible("stationary space has dimension " + std::to_string(N - rank));

    int free_col = 0;
    for (int col = 0; col < N; ++col) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), col) == pivot_cols.end()) {
            free_col = col;
            break;
        }
    }
    std::vector<Field> pi(N, Field(0));
    pi[free_col] = Field(1);
    for (int r = 0; r < rank; ++r) pi[pivot_cols[r]] = -A[r][free_col];

    Field sum(0);
    for (const auto& v : pi) sum += v;
    if (field_is_zero(sum)) throw NotIrreducible("stationary vector sums to zero");
    const Field inv = Field(1) / sum;
    for (auto& v : pi) v = v * inv;
    return pi;
}

}  // namespace detail

struct TransitionMatrix {
    StateSpace space;
    BigRat t;
    bool t_in_range = true;  // 0 <= t <= 1; anything else is a formal matrix
    std::vector<std::vector<BigRat>> rows;
};

inline TransitionMatrix build_chain(const Composition& lambda, const BigRat& t) {
    TransitionMatrix M;
    M.space = make_state_space(lambda);
    M.t = t;
    M.t_in_range = t >= 0 && t <= 1;
    M.rows = detail::transition_rows(M.space, t);
    return M;
}

struct StationaryVector {
    StateSpace space;
    BigRat t;
    std::vector<BigRat> pi;  // sums to 1, aligned with space.states
};

inline StationaryVector stationary(const Composition& lambda, const BigRat& t) {
    const TransitionMatrix M = build_chain(lambda, t);
    StationaryVector out{M.space, t, detail::stationary_from_rows(M.rows)};
    if (M.t_in_range) {
        for (const auto& v : out.pi)
            if (v <= 0) throw NotIrreducible("stationary vector not strictly positive");
    }
    return out;
}

// Stationary vector with t left symbolic, as rational functions in t.
// Elimination over the function field grows quickly, hence the state cap.
inline std::vector<RatFuncT> stationary_symbolic(const Composition& lambda, int max_states = 12) {
    const StateSpace S = make_state_space(lambda);
    if (static_cast<int>(S.states.size()) > max_states)
        throw MismatchedArity("symbolic solve capped at " + std::to_string(max_states) +
                              " states");
    return detail::stationary_from_rows(detail::transition_rows(S, RatFuncT::variable()));
}

// x = (1,...,1), q = 1 specialization of an x-polynomial, kept symbolic in t.
inline RatFuncT specialize_t(const XPolynomial& f) {
    RatFuncT out(0);
    for (const auto& [mono, coef] : f.terms()) {
        (void)mono;
        PolyT num;
        for (const auto& [e, c] : coef.num().terms()) {
            std::vector<BigRat> v(e.dt + 1, BigRat(0));
            v[e.dt] = c;
            num = num + PolyT(std::move(v));
        }
        RatFuncT term(num);
        for (const auto& fac : coef.den()) {
            if (fac.b == 0) throw PoleAtEvaluationPoint("factor vanishes identically at q = 1");
            std::vector<BigRat> d(fac.b + 1, BigRat(0));
            d[0] = 1;
            d[fac.b] -= 1;
            term = term / RatFuncT(PolyT(std::move(d)));
        }
        out += term;
    }
    return out;
}

struct MartinReport {
    Composition lambda;
    BigRat t;              // unused when symbolic
    bool symbolic = false;
    int state_count = 0;
    long pairs_checked = 0;
    bool ok = true;
    std::string detail;  // first mismatch, empty when ok
};

// Cross-ratio comparison of the stationary vector against the F polynomials
// specialized at x = (1,...,1), q = 1: pi_mu / pi_nu must equal f_mu / f_nu
// for every pair of states.
inline MartinReport martin_check(const Composition& lambda, const BigRat& t) {
    MartinReport rep;
    rep.lambda = lambda;
    rep.t = t;
    const StationaryVector sv = stationary(lambda, t);
    rep.state_count = static_cast<int>(sv.space.states.size());

    const int n = static_cast<int>(lambda.size());
    const std::vector<BigRat> ones(n, BigRat(1));
    std::vector<BigRat> f;
    f.reserve(sv.space.states.size());
    for (const auto& mu : sv.space.states) f.push_back(F(mu).evaluate(ones, BigRat(1), t));

    for (std::size_t i = 0; i < f.size() && rep.ok; ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            ++rep.pairs_checked;
            if (sv.pi[i] * f[j] == sv.pi[j] * f[i]) continue;
            rep.ok = false;
            rep.detail = "states " + composition_str(sv.space.states[i]) + " and " +
                         composition_str(sv.space.states[j]) + " disagree";
            break;
        }
    }
    return rep;
}

// Same comparison with t symbolic: both sides live in the field of rational
// functions in t, so agreement is an identity in t, not a sample.
inline MartinReport martin_check_symbolic(const Composition& lambda, int max_states = 12) {
    MartinReport rep;
    rep.lambda = lambda;
    rep.symbolic = true;
    const StateSpace S = make_state_space(lambda);
    rep.state_count = static_cast<int>(S.states.size());
    const std::vector<RatFuncT> pi = stationary_symbolic(lambda, max_states);
    std::vector<RatFuncT> f;
    f.reserve(S.states.size());
    for (const auto& mu : S.states) f.push_back(specialize_t(F(mu)));

    for (std::size_t i = 0; i < f.size() && rep.ok; ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            ++rep.pairs_checked;
            if (pi[i] * f[j] == pi[j] * f[i]) continue;
            rep.ok = false;
            rep.detail = "states " + composition_str(S.states[i]) + " and " +
                         composition_str(S.states[j]) + " disagree";
            break;
        }
    }
    return rep;
}

struct SimulationResult {
    StateSpace space;
    long steps = 0;
    std::vector<long> visits;  // per-state occupation counts, one per step

    BigRat frequency(int state) const { return BigRat(visits[state]) / steps; }
};

// Seed-deterministic Monte Carlo run of the same dynamics: per step, draw a
// uniform pair position; a heavier-in-front pair swaps when a uniform draw
// over t's denominator lands below its numerator, a lighter-in-front pair
// always swaps. Starts from the sorted state.
inline SimulationResult simulate(const Composition& lambda, const BigRat& t, long steps,
                                 std::uint64_t seed) {
    if (steps < 1) throw MismatchedArity("simulation needs at least one step");
    if (t < 0 || t > 1) throw MismatchedArity("simulation needs 0 <= t <= 1");
    if (!t.get_den().fits_ulong_p() || !t.get_num().fits_ulong_p())
        throw MismatchedArity("simulation needs a small rational t");
    SimulationResult res;
    res.space = make_state_space(lambda);
    res.steps = steps;
    res.visits.assign(res.space.states.size(), 0);

    const int n = static_cast<int>(lambda.size());
    const unsigned long num = t.get_num().get_ui();
    const unsigned long den = t.get_den().get_ui();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<unsigned long> accept(0, den - 1);

    Composition cur = lambda;
    for (long s = 0; s < steps; ++s) {
        const int k = pick(rng);
        const int k2 = (k + 1) % n;
        if (cur[k] != cur[k2]) {
            const bool swap_now = cur[k] > cur[k2] ? accept(rng) < num : true;
            if (swap_now) std::swap(cur[k], cur[k2]);
        }
        ++res.visits[res.space.index(cur)];
    }
    return res;
}

}  // namespace mlq
