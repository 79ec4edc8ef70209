#pragma once

// Exact coefficient ring for everything downstream: sparse Laurent polynomials
// in (q, t) over the rationals, and fractions whose denominators are multisets
// of binomial factors (1 - q^a t^b). That restricted denominator shape is
// closed under all the arithmetic this library performs, so no multivariate
// gcd is ever needed: cancellation is trial exact division to a fixed point,
// and equality is decided by cross-multiplication.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlq/errors.hpp"
#include "mlq/rational.hpp"

namespace mlq {

// Exponent pair of a q^dq t^dt monomial. Exponents may be negative.
struct QTExp {
    int dq = 0;
    int dt = 0;
    friend bool operator==(const QTExp&, const QTExp&) = default;
};

// Graded lexicographic order; fixed globally so serialized output is stable.
struct QTExpOrder {
    bool operator()(const QTExp& a, const QTExp& b) const {
        long da = static_cast<long>(a.dq) + a.dt;
        long db = static_cast<long>(b.dq) + b.dt;
        if (da != db) return da < db;
        if (a.dq != b.dq) return a.dq < b.dq;
        return a.dt < b.dt;
    }
};

// One denominator factor (1 - q^a t^b), a, b >= 0, (a, b) != (0, 0).
struct QTFactor {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const QTFactor&, const QTFactor&) = default;
};

class QTPoly {
  public:
    using TermMap = std::map<QTExp, BigRat, QTExpOrder>;

    QTPoly() = default;
    explicit QTPoly(const BigRat& c) {
        if (c != 0) terms_[QTExp{0, 0}] = c;
    }
    explicit QTPoly(long c) : QTPoly(BigRat(c)) {}

    static QTPoly monomial(int dq, int dt, const BigRat& c = BigRat(1)) {
        QTPoly p;
        if (c != 0) p.terms_[QTExp{dq, dt}] = c;
        return p;
    }
    static QTPoly one() { return QTPoly(1); }
    static QTPoly q() { return monomial(1, 0); }
    static QTPoly t() { return monomial(0, 1); }
    // Expanded form of (1 - q^a t^b).
    static QTPoly factor(const QTFactor& f) {
        QTPoly p = one();
        p.add_term(f.a, f.b, BigRat(-1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0});
    }
    BigRat constant_value() const {
        if (terms_.empty()) return BigRat(0);
        return terms_.begin()->second;
    }
    const TermMap& terms() const { return terms_; }

    void add_term(int dq, int dt, const BigRat& c) {
        if (c == 0) return;
        QTExp e{dq, dt};
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QTPoly& operator+=(const QTPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.dq, e.dt, c);
        return *this;
    }
    QTPoly& operator-=(const QTPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.dq, e.dt, -c);
        return *this;
    }
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    QTPoly operator-() const {
        QTPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
        QTPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea.dq + eb.dq, ea.dt + eb.dt, ca * cb);
        return r;
    }
    QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }
    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

    QTPoly scaled(const BigRat& c) const {
        if (c == 0) return QTPoly();
        QTPoly r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    // Multiply by q^dq t^dt (exponent shift; always invertible).
    QTPoly shifted(int dq, int dt) const {
        QTPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(QTExp{e.dq + dq, e.dt + dt}, c);
        return r;
    }

    int min_q_degree() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (first || e.dq < m) m = e.dq;
            first = false;
        }
        return m;
    }
    // Drops all terms with q-degree >= bound.
    QTPoly truncated_q(int bound) const {
        QTPoly r;
        for (const auto& [e, c] : terms_)
            if (e.dq < bound) r.terms_.emplace(e, c);
        return r;
    }

    // Exact division by (1 - q^a t^b); nullopt when not divisible. Terms are
    // consumed smallest-first in the order induced by the linear functional
    // l(v) = a*v.dq + b*v.dt (ties broken lexicographically): subtracting
    // c*x^v*(1 - q^a t^b) removes the minimal term and adds one with strictly
    // larger l, so the minimum increases every step. In an exact quotient
    // every quotient exponent satisfies l(v) <= max_l(f) - l(a,b), which gives
    // both the failure test and termination.
    std::optional<QTPoly> divided_by(const QTFactor& f) const {
        if (terms_.empty()) return QTPoly();
        const long lf = static_cast<long>(f.a) * f.a + static_cast<long>(f.b) * f.b;
        auto ell = [&f](const QTExp& e) {
            return static_cast<long>(f.a) * e.dq + static_cast<long>(f.b) * e.dt;
        };
        long max_ell = ell(terms_.begin()->first);
        for (const auto& [e, c] : terms_) {
            (void)c;
            max_ell = std::max(max_ell, ell(e));
        }
        const long bound = max_ell - lf;

        auto cmp = [&ell](const QTExp& x, const QTExp& y) {
            long lx = ell(x), ly = ell(y);
            if (lx != ly) return lx < ly;
            if (x.dq != y.dq) return x.dq < y.dq;
            return x.dt < y.dt;
        };
        std::map<QTExp, BigRat, decltype(cmp)> work(cmp);
        for (const auto& [e, c] : terms_) work.emplace(e, c);

        QTPoly quotient;
        while (!work.empty()) {
            auto [e, c] = *work.begin();
            if (ell(e) > bound) return std::nullopt;
            work.erase(work.begin());
            quotient.terms_.emplace(e, c);
            QTExp up{e.dq + f.a, e.dt + f.b};
            auto it = work.find(up);
            if (it == work.end()) {
                work.emplace(up, c);
            } else {
                it->second += c;
                if (it->second == 0) work.erase(it);
            }
        }
        return quotient;
    }

    BigRat evaluate(const BigRat& q, const BigRat& t) const {
        BigRat acc(0);
        for (const auto& [e, c] : terms_) acc += c * pow_bigrat(q, e.dq) * pow_bigrat(t, e.dt);
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            BigRat mag = c < 0 ? BigRat(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono = monomial_str(e.dq, e.dt);
            if (mono.empty()) {
                out += mag.get_str();
            } else {
                if (mag != 1) out += mag.get_str() + "*";
                out += mono;
            }
        }
        return out;
    }

    static std::string monomial_str(int dq, int dt) {
        std::string s;
        if (dq != 0) s += dq == 1 ? "q" : "q^" + std::to_string(dq);
        if (dt != 0) {
            if (!s.empty()) s += "*";
            s += dt == 1 ? "t" : "t^" + std::to_string(dt);
        }
        return s;
    }

  private:
    TermMap terms_;
};

inline std::string factor_str(const QTFactor& f) { return "1-" + QTPoly::monomial_str(f.a, f.b); }

// num / prod(1 - q^a t^b). Canonical: zero has an empty denominator, no
// denominator factor divides the numerator, factors sorted by (a, b).
class QTRational {
  public:
    QTRational() = default;
    QTRational(const QTPoly& num) : num_(num) {}  // NOLINT(google-explicit-constructor)
    QTRational(const BigRat& c) : num_(c) {}      // NOLINT(google-explicit-constructor)
    QTRational(long c) : num_(c) {}               // NOLINT(google-explicit-constructor)
    QTRational(QTPoly num, std::vector<QTFactor> den) : num_(std::move(num)), den_(std::move(den)) {
        for (const auto& f : den_)
            if (f.a < 0 || f.b < 0 || (f.a == 0 && f.b == 0))
                throw MismatchedArity("invalid denominator factor");
        canonicalize();
    }

    static QTRational one_over(const QTFactor& f) { return QTRational(QTPoly::one(), {f}); }

    bool is_zero() const { return num_.is_zero(); }
    const QTPoly& num() const { return num_; }
    const std::vector<QTFactor>& den() const { return den_; }

    // Canonicalizing twice equals canonicalizing once (tested).
    void canonicalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto it = den_.begin(); it != den_.end(); ++it) {
                if (auto r = num_.divided_by(*it)) {
                    num_ = std::move(*r);
                    den_.erase(it);
                    progress = true;
                    break;
                }
            }
        }
        std::sort(den_.begin(), den_.end());
    }

    friend QTRational operator+(const QTRational& x, const QTRational& y) {
        std::vector<QTFactor> x_only, y_only, both;
        split_dens(x.den_, y.den_, x_only, y_only, both);
        QTRational r;
        r.num_ = x.num_ * expand(y_only) + y.num_ * expand(x_only);
        r.den_ = both;
        r.den_.insert(r.den_.end(), x_only.begin(), x_only.end());
        r.den_.insert(r.den_.end(), y_only.begin(), y_only.end());
        r.canonicalize();
        return r;
    }
    friend QTRational operator-(const QTRational& x, const QTRational& y) { return x + (-y); }
    QTRational operator-() const {
        QTRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend QTRational operator*(const QTRational& x, const QTRational& y) {
        QTRational r;
        r.num_ = x.num_ * y.num_;
        r.den_ = x.den_;
        r.den_.insert(r.den_.end(), y.den_.begin(), y.den_.end());
        r.canonicalize();
        return r;
    }
    QTRational& operator+=(const QTRational& o) { return *this = *this + o; }
    QTRational& operator-=(const QTRational& o) { return *this = *this - o; }
    QTRational& operator*=(const QTRational& o) { return *this = *this * o; }

    // Multiply by 1/(1 - q^a t^b).
    QTRational over(const QTFactor& f) const {
        QTRational r = *this;
        r.den_.push_back(f);
        r.canonicalize();
        return r;
    }
    QTRational times_monomial(int dq, int dt, const BigRat& c = BigRat(1)) const {
        QTRational r = *this;
        r.num_ = r.num_.shifted(dq, dt).scaled(c);
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }
    QTRational scaled(const BigRat& c) const {
        QTRational r = *this;
        r.num_ = r.num_.scaled(c);
        if (r.num_.is_zero()) r.den_.clear();
        return r;
    }

    // Representations are canonical per computation route but not unique
    // across routes, so equality is decided by cross-multiplication.
    friend bool operator==(const QTRational& x, const QTRational& y) {
        std::vector<QTFactor> x_only, y_only, both;
        split_dens(x.den_, y.den_, x_only, y_only, both);
        return x.num_ * expand(y_only) == y.num_ * expand(x_only);
    }

    bool is_polynomial() const { return den_.empty(); }
    const QTPoly& as_poly() const {
        if (!den_.empty()) throw NotDivisible("value has a nontrivial denominator");
        return num_;
    }

    BigRat evaluate(const BigRat& q, const BigRat& t) const {
        BigRat den_val(1);
        for (const auto& f : den_) {
            BigRat v = BigRat(1) - pow_bigrat(q, f.a) * pow_bigrat(t, f.b);
            if (v == 0)
                throw PoleAtEvaluationPoint("denominator factor (" + factor_str(f) +
                                            ") vanishes at the evaluation point");
            den_val *= v;
        }
        return num_.evaluate(q, t) / den_val;
    }

    std::string str() const {
        if (den_.empty()) return num_.str();
        std::string out = "(" + num_.str() + ")/(";
        for (size_t i = 0; i < den_.size(); ++i) {
            if (i) out += "*";
            out += "(" + factor_str(den_[i]) + ")";
        }
        out += ")";
        return out;
    }

  private:
    static QTPoly expand(const std::vector<QTFactor>& fs) {
        QTPoly p = QTPoly::one();
        for (const auto& f : fs) p *= QTPoly::factor(f);
        return p;
    }
    // Multiset split of two sorted factor lists into exclusive and shared parts.
    static void split_dens(const std::vector<QTFactor>& x, const std::vector<QTFactor>& y,
                           std::vector<QTFactor>& x_only, std::vector<QTFactor>& y_only,
                           std::vector<QTFactor>& both) {
        size_t i = 0, j = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i] == y[j]) {
                both.push_back(x[i]);
                ++i;
                ++j;
            } else if (x[i] < y[j]) {
                x_only.push_back(x[i++]);
            } else {
                y_only.push_back(y[j++]);
            }
        }
        for (; i < x.size(); ++i) x_only.push_back(x[i]);
        for (; j < y.size(); ++j) y_only.push_back(y[j]);
    }

    QTPoly num_;
    std::vector<QTFactor> den_;
};

inline QTRational qt_add(const QTRational& a, const QTRational& b) { return a + b; }
inline QTRational qt_mul(const QTRational& a, const QTRational& b) { return a * b; }
inline QTRational qt_neg(const QTRational& a) { return -a; }
inline bool qt_equals(const QTRational& a, const QTRational& b) { return a == b; }

}  // namespace mlq
