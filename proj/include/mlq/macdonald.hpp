#pragma once
// Polynomials built from queue weights, and the operator calculus acting on
// them: Hecke generators T_i and their inverses, the q-shift, and the
// commuting Y_i operators whose eigenfunctions the F polynomials are.
//
// F(mu) sums wt_x * wt_qt over enumerate_mlq(mu). Z(lambda) sums F over all
// rearrangements of lambda and is symmetric with [x^lambda] = 1.
// check_qkz() verifies the exchange/cyclicity relations tying the family
// {F_mu} together and returns a report instead of throwing, so a single run
// surfaces every broken identity at once.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlq/composition.hpp"
#include "mlq/errors.hpp"
#include "mlq/mlq.hpp"
#include "mlq/qt_ring.hpp"
#include "mlq/xpoly.hpp"

namespace mlq {

// Total weight of all multiline queues of type mu, one explicit queue at a
// time. weight_polynomials() computes the same values for a whole
// rearrangement class in one pass; keeping both routes separate lets tests
// cross-check them.
inline XPolynomial F(const Composition& mu) {
    check_composition(mu);
    XPolynomial out = XPolynomial::zero(static_cast<int>(mu.size()));
    for (const auto& q : enumerate_mlq(mu)) out += XPolynomial::monomial(wt_x(q), wt_qt(q));
    return out;
}

// All F_mu for rearrangements mu of a partition, keyed by mu.
struct QKZFamily {
    Composition lambda;
    std::map<Composition, XPolynomial> members;

    static QKZFamily build(const Composition& lambda) {
        if (!is_partition(lambda))
            throw MismatchedArity("family shape must have weakly decreasing parts");
        QKZFamily fam;
        fam.lambda = lambda;
        fam.members = weight_polynomials(lambda, static_cast<int>(lambda.size()));
        return fam;
    }

    const XPolynomial& at(const Composition& mu) const {
        auto it = members.find(mu);
        if (it == members.end())
            throw IndexOutOfRange("no member " + composition_str(mu));
        return it->second;
    }
};

// Symmetric polynomial Z_lambda = sum of F_mu over distinct rearrangements.
inline XPolynomial Z(const Composition& lambda) {
    if (!is_partition(lambda)) throw MismatchedArity("Z expects weakly decreasing parts");
    const int n = static_cast<int>(lambda.size());
    XPolynomial out = XPolynomial::zero(n);
    for (const auto& [mu, f] : weight_polynomials(lambda, n)) out += f;
    return out;
}

// T_i f = t f - (t x_i - x_{i+1}) (f - s_i f)/(x_i - x_{i+1}).
// f - s_i f vanishes at x_i = x_{i+1}, so the division is always exact.
inline XPolynomial hecke_T(int i, const XPolynomial& f) {
    XPolynomial h = (f - f.swap_vars(i)).divide_by_xdiff(i);
    return f.scaled(QTPoly::t()) - h.times_x(i).scaled(QTPoly::t()) + h.times_x(i + 1);
}

// T_i^{-1} f = (T_i f + (1-t) f) / t, from (T_i - t)(T_i + 1) = 0.
inline XPolynomial hecke_T_inverse(int i, const XPolynomial& f) {
    XPolynomial g = hecke_T(i, f) + f.scaled(QTPoly::one() - QTPoly::t());
    return g.scaled(QTRational(QTPoly::monomial(0, -1)));
}

// (omega f)(x_1,...,x_n) = f(q x_n, x_1,..., x_{n-1}).
inline XPolynomial shift_omega(const XPolynomial& f) { return f.shift_variables(); }

// Y_i = T_i^{-1} ... T_{n-1}^{-1} omega T_1 ... T_{i-1}, rightmost factor
// applied first. The Y_i commute pairwise.
inline XPolynomial cherednik_Y(int i, const XPolynomial& f) {
    const int n = f.n();
    if (i < 1 || i > n) throw IndexOutOfRange("Y index " + std::to_string(i));
    XPolynomial g = f;
    for (int j = i - 1; j >= 1; --j) g = hecke_T(j, g);
    g = shift_omega(g);
    for (int j = n - 1; j >= i; --j) g = hecke_T_inverse(j, g);
    return g;
}

// Eigenvalue of Y_i on F_lambda for a partition lambda:
// q^{lambda_i} t^{#{j<i: lambda_j=lambda_i} - #{j>i: lambda_j=lambda_i}}.
struct CherednikEigenvalue {
    int i = 0;
    QTRational value;
};

inline CherednikEigenvalue y_eigenvalue(const Composition& lambda, int i) {
    if (!is_partition(lambda))
        throw MismatchedArity("eigenvalue shape must have weakly decreasing parts");
    const int n = static_cast<int>(lambda.size());
    if (i < 1 || i > n) throw IndexOutOfRange("Y index " + std::to_string(i));
    int before = 0;
    int after = 0;
    for (int j = 0; j < n; ++j) {
        if (lambda[j] != lambda[i - 1]) continue;
        if (j < i - 1) ++before;
        if (j > i - 1) ++after;
    }
    return {i, QTRational(1).times_monomial(lambda[i - 1], before - after)};
}

// F_lambda for a partition, certified: monic coefficient on x^lambda and a
// simultaneous eigenfunction of every Y_i with the stated eigenvalue.
inline XPolynomial E_nonsymmetric(const Composition& lambda) {
    if (!is_partition(lambda)) throw MismatchedArity("E expects weakly decreasing parts");
    XPolynomial f = F(lambda);
    if (!(f.coeff(lambda) == QTRational(1)))
        throw CharacterizationFailed("coefficient of the leading monomial is not 1 for " +
                                     composition_str(lambda));
    const int n = static_cast<int>(lambda.size());
    for (int i = 1; i <= n; ++i) {
        if (!(cherednik_Y(i, f) == f.scaled(y_eigenvalue(lambda, i).value)))
            throw CharacterizationFailed("Y_" + std::to_string(i) + " eigenvector check failed for " +
                                         composition_str(lambda));
    }
    return f;
}

// Schur polynomial by brute-force semistandard tableau enumeration: rows
// weakly increase, columns strictly increase, entries in 1..n. Independent of
// the queue machinery; used as a q=t specialization oracle.
inline XPolynomial schur_oracle(const Composition& lambda_in, int n) {
    if (!is_partition(lambda_in)) throw MismatchedArity("Schur shape must be a partition");
    Composition lam;
    for (int p : lambda_in)
        if (p > 0) lam.push_back(p);
    XPolynomial out = XPolynomial::zero(n);
    if (lam.empty()) return XPolynomial::one(n);
    const int rows = static_cast<int>(lam.size());
    std::vector<std::vector<int>> tab(rows);
    for (int r = 0; r < rows; ++r) tab[r].assign(lam[r], 0);
    XMonomial exps(n, 0);
    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            out += XPolynomial::monomial(exps, QTRational(1));
            return;
        }
        int nr = r;
        int nc = c + 1;
        if (nc == lam[r]) {
            ++nr;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            tab[r][c] = v;
            ++exps[v - 1];
            self(self, nr, nc);
            --exps[v - 1];
        }
    };
    fill(fill, 0, 0);
    return out;
}

// One verified identity instance. i is 0 for the cyclic relation, which does
// not involve a swap position.
struct QKZCheck {
    std::string identity;
    Composition mu;
    int i = 0;
    bool pass = true;
};

struct QKZReport {
    Composition lambda;
    std::vector<QKZCheck> checks;
    int failed = 0;

    bool all_pass() const { return failed == 0; }

    // identity -> (passed, total)
    std::map<std::string, std::pair<int, int>> tally() const {
        std::map<std::string, std::pair<int, int>> out;
        for (const auto& c : checks) {
            auto& [pass, total] = out[c.identity];
            if (c.pass) ++pass;
            ++total;
        }
        return out;
    }
};

// Verifies, for every rearrangement mu of lambda and every admissible i:
//   exchange           T_i F_mu = F_{s_i mu}                    (mu_i > mu_{i+1})
//   exchange-linear    (1-t) x_{i+1} F_mu + (t x_i - x_{i+1}) s_i F_mu
//                        = (x_i - x_{i+1}) F_{s_i mu}           (mu_i > mu_{i+1})
//   equal-scaling      T_i F_mu = t F_mu                        (mu_i = mu_{i+1})
//   equal-symmetry     s_i F_mu = F_mu                          (mu_i = mu_{i+1})
//   sum-symmetry       F_mu + F_{s_i mu} symmetric in x_i, x_{i+1}   (all mu)
//   twisted-symmetry   t x_{i+1} F_mu + x_i F_{s_i mu} symmetric     (mu_i > mu_{i+1})
//   cyclic-shift       F_{mu_n, mu_1, ...}(q x_n, x_1, ..., x_{n-1})
//                        = q^{mu_n} F_mu(x)                     (all mu)
// Failures are recorded, never thrown. The two-argument form runs the same
// battery over any candidate family keyed by the rearrangements of lambda.
inline QKZReport check_qkz(const Composition& lambda,
                           const std::map<Composition, XPolynomial>& fam) {
    if (!is_partition(lambda)) throw MismatchedArity("check_qkz expects weakly decreasing parts");
    QKZReport rep;
    rep.lambda = lambda;
    const int n = static_cast<int>(lambda.size());
    auto record = [&rep](const char* id, const Composition& mu, int i, bool ok) {
        if (!ok) ++rep.failed;
        rep.checks.push_back({id, mu, i, ok});
    };
    const QTRational t_coeff{QTPoly::t()};
    const QTRational one_minus_t{QTPoly::factor({0, 1})};
    for (const auto& [mu, f] : fam) {
        for (int i = 1; i < n; ++i) {
            if (mu[i - 1] > mu[i]) {
                const XPolynomial& g = fam.at(swap_adjacent(mu, i));
                record("exchange", mu, i, hecke_T(i, f) == g);
                XPolynomial sf = f.swap_vars(i);
                XPolynomial lhs = f.times_x(i + 1).scaled(one_minus_t) +
                                  sf.times_x(i).scaled(t_coeff) - sf.times_x(i + 1);
                record("exchange-linear", mu, i,
                       lhs == g.times_x(i) - g.times_x(i + 1));
                record("twisted-symmetry", mu, i,
                       (f.times_x(i + 1).scaled(t_coeff) + g.times_x(i)).symmetric_in(i));
            } else if (mu[i - 1] == mu[i]) {
                record("equal-scaling", mu, i, hecke_T(i, f) == f.scaled(t_coeff));
                record("equal-symmetry", mu, i, f.symmetric_in(i));
            }
            record("sum-symmetry", mu, i,
                   (f + fam.at(swap_adjacent(mu, i))).symmetric_in(i));
        }
        record("cyclic-shift", mu, 0,
               shift_omega(fam.at(cyclic_right(mu))) ==
                   f.scaled(QTRational(1).times_monomial(mu.back(), 0)));
    }
    return rep;
}

inline QKZReport check_qkz(const Composition& lambda) {
    if (!is_partition(lambda)) throw MismatchedArity("check_qkz expects weakly decreasing parts");
    return check_qkz(lambda, weight_polynomials(lambda, static_cast<int>(lambda.size())));
}

}  // namespace mlq
