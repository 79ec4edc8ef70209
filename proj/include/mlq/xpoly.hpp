#pragma once

// Polynomials in x_1..x_n with QTRational coefficients. Monomial exponents are
// nonnegative; variable indices in the public API are 1-based to match the
// algebra they implement (s_i, T_i, x_i).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlq/composition.hpp"
#include "mlq/qt_ring.hpp"

namespace mlq {

using XMonomial = std::vector<int>;

class XPolynomial {
  public:
    // Lexicographic monomial order (std::map default on vectors).
    using TermMap = std::map<XMonomial, QTRational>;

    explicit XPolynomial(int n) : n_(n) {
        if (n < 1) throw MismatchedArity("variable count must be >= 1");
    }

    static XPolynomial zero(int n) { return XPolynomial(n); }
    static XPolynomial one(int n) { return constant(n, QTRational(1)); }
    static XPolynomial constant(int n, const QTRational& c) {
        XPolynomial p(n);
        p.add_term(XMonomial(n, 0), c);
        return p;
    }
    // The variable x_i, 1 <= i <= n.
    static XPolynomial x(int n, int i) {
        XPolynomial p(n);
        XMonomial m(n, 0);
        p.check_var(i);
        m[i - 1] = 1;
        p.add_term(m, QTRational(1));
        return p;
    }
    static XPolynomial monomial(XMonomial m, const QTRational& c) {
        XPolynomial p(static_cast<int>(m.size()));
        p.add_term(std::move(m), c);
        return p;
    }

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(XMonomial m, const QTRational& c) {
        if (static_cast<int>(m.size()) != n_) throw MismatchedArity("monomial arity mismatch");
        for (int e : m)
            if (e < 0) throw MismatchedArity("negative x exponent");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QTRational coeff(const XMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? QTRational(0) : it->second;
    }

    XPolynomial& operator+=(const XPolynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    XPolynomial& operator-=(const XPolynomial& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
    XPolynomial operator-() const {
        XPolynomial r(n_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
        a.check_arity(b);
        XPolynomial r(a.n_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                XMonomial m(a.n_);
                for (int k = 0; k < a.n_; ++k) m[k] = ma[k] + mb[k];
                r.add_term(std::move(m), ca * cb);
            }
        return r;
    }
    XPolynomial& operator*=(const XPolynomial& o) { return *this = *this * o; }

    XPolynomial scaled(const QTRational& c) const {
        XPolynomial r(n_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : terms_) {
            QTRational v = k * c;
            if (!v.is_zero()) r.terms_.emplace(m, v);
        }
        return r;
    }
    // Multiply every term by x_i^e.
    XPolynomial times_x(int i, int e = 1) const {
        check_var(i);
        XPolynomial r(n_);
        for (const auto& [m, c] : terms_) {
            XMonomial mm = m;
            mm[i - 1] += e;
            if (mm[i - 1] < 0) throw MismatchedArity("negative x exponent");
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    friend bool operator==(const XPolynomial& a, const XPolynomial& b) {
        a.check_arity(b);
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }

    // f with x_i and x_{i+1} exchanged in every monomial; 1 <= i <= n-1.
    XPolynomial swap_vars(int i) const {
        if (i < 1 || i >= n_) throw IndexOutOfRange("swap_vars index " + std::to_string(i));
        XPolynomial r(n_);
        for (const auto& [m, c] : terms_) {
            XMonomial mm = m;
            std::swap(mm[i - 1], mm[i]);
            r.add_term(std::move(mm), c);
        }
        return r;
    }

    bool symmetric_in(int i) const { return swap_vars(i) == *this; }
    bool is_symmetric() const {
        for (int i = 1; i < n_; ++i)
            if (!symmetric_in(i)) return false;
        return true;
    }

    // Exact quotient f / (x_i - x_{i+1}), by synthetic division in x_i over
    // the ring of polynomials in the remaining variables. NotDivisible if a
    // remainder survives.
    XPolynomial divide_by_xdiff(int i) const {
        if (i < 1 || i >= n_) throw IndexOutOfRange("divide_by_xdiff index " + std::to_string(i));
        // Collect f = sum_k A_k * x_i^k with A_k free of x_i.
        std::map<int, XPolynomial> coefs;
        int dmax = 0;
        for (const auto& [m, c] : terms_) {
            int k = m[i - 1];
            dmax = std::max(dmax, k);
            XMonomial mm = m;
            mm[i - 1] = 0;
            coefs.try_emplace(k, n_).first->second.add_term(std::move(mm), c);
        }
        auto A = [&](int k) -> XPolynomial {
            auto it = coefs.find(k);
            return it == coefs.end() ? zero(n_) : it->second;
        };
        // b_{k-1} = A_k + x_{i+1} * b_k, descending; remainder A_0 + x_{i+1}*b_0.
        XPolynomial quotient(n_);
        XPolynomial carry = zero(n_);
        for (int k = dmax; k >= 1; --k) {
            XPolynomial bk = A(k) + carry;
            quotient += bk.times_x(i, k - 1);
            carry = bk.times_x(i + 1);
        }
        if (!(A(0) + carry).is_zero())
            throw NotDivisible("polynomial is not divisible by (x_" + std::to_string(i) + " - x_" +
                               std::to_string(i + 1) + ")");
        return quotient;
    }

    // f(q x_n, x_1, ..., x_{n-1}).
    XPolynomial shift_variables() const {
        XPolynomial r(n_);
        for (const auto& [m, c] : terms_) {
            XMonomial mm(n_);
            for (int k = 0; k + 1 < n_; ++k) mm[k] = m[k + 1];
            mm[n_ - 1] = m[0];
            r.add_term(std::move(mm), c.times_monomial(m[0], 0));
        }
        return r;
    }

    BigRat evaluate(const std::vector<BigRat>& xs, const BigRat& q, const BigRat& t) const {
        if (static_cast<int>(xs.size()) != n_) throw MismatchedArity("evaluation point arity");
        BigRat acc(0);
        for (const auto& [m, c] : terms_) {
            BigRat v = c.evaluate(q, t);
            for (int k = 0; k < n_; ++k) v *= pow_bigrat(xs[k], m[k]);
            acc += v;
        }
        return acc;
    }

    std::optional<int> homogeneous_degree() const {
        if (terms_.empty()) return std::nullopt;
        int deg = -1;
        for (const auto& [m, c] : terms_) {
            (void)c;
            int d = 0;
            for (int e : m) d += e;
            if (deg < 0) deg = d;
            if (d != deg) return std::nullopt;
        }
        return deg;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int k = 0; k < n_; ++k) {
                if (m[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(k + 1);
                if (m[k] != 1) mono += "^" + std::to_string(m[k]);
            }
            bool coef_is_one = c.den().empty() && c.num() == QTPoly::one();
            if (mono.empty()) {
                out += coef_is_one ? "1" : "(" + c.str() + ")";
            } else if (coef_is_one) {
                out += mono;
            } else {
                out += "(" + c.str() + ")*" + mono;
            }
        }
        return out;
    }

  private:
    void check_arity(const XPolynomial& o) const {
        if (n_ != o.n_) throw MismatchedArity("operand variable counts differ");
    }
    void check_var(int i) const {
        if (i < 1 || i > n_) throw IndexOutOfRange("variable index " + std::to_string(i));
    }

    int n_;
    TermMap terms_;
};

inline XPolynomial swap_vars(const XPolynomial& f, int i) { return f.swap_vars(i); }
inline XPolynomial divide_by_xdiff(const XPolynomial& f, int i) { return f.divide_by_xdiff(i); }
inline BigRat evaluate(const XPolynomial& f, const std::vector<BigRat>& xs, const BigRat& q,
                       const BigRat& t) {
    return f.evaluate(xs, q, t);
}

}  // namespace mlq
