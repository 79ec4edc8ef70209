#pragma once

// Univariate polynomials and rational functions over exact rationals: just
// enough field arithmetic to run Gaussian elimination symbolically in one
// parameter. Coefficients are dense, index = degree.

#include <string>
#include <utility>
#include <vector>

#include "mlq/errors.hpp"
#include "mlq/rational.hpp"

namespace mlq {

class PolyT {
public:
    PolyT() = default;
    PolyT(const BigRat& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) coef_.push_back(c);
    }
    PolyT(long c) : PolyT(BigRat(c)) {}  // NOLINT(google-explicit-constructor)
    static PolyT variable() { return PolyT(std::vector<BigRat>{BigRat(0), BigRat(1)}); }
    explicit PolyT(std::vector<BigRat> coef) : coef_(std::move(coef)) { trim(); }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for zero
    const BigRat& leading() const { return coef_.back(); }
    BigRat coefficient(int d) const {
        if (d < 0 || d > degree()) return BigRat(0);
        return coef_[d];
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        std::vector<BigRat> out(std::max(a.coef_.size(), b.coef_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) out[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) out[i] += b.coef_[i];
        return PolyT(std::move(out));
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) {
        std::vector<BigRat> out(std::max(a.coef_.size(), b.coef_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) out[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) out[i] -= b.coef_[i];
        return PolyT(std::move(out));
    }
    friend PolyT operator-(const PolyT& a) { return PolyT() - a; }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        if (a.is_zero() || b.is_zero()) return PolyT();
        std::vector<BigRat> out(a.coef_.size() + b.coef_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
        return PolyT(std::move(out));
    }
    friend bool operator==(const PolyT& a, const PolyT& b) { return a.coef_ == b.coef_; }

    // Quotient and remainder with deg(rem) < deg(b). b must be nonzero.
    friend std::pair<PolyT, PolyT> divmod(const PolyT& a, const PolyT& b) {
        if (b.is_zero()) throw NotDivisible("polynomial division by zero");
        std::vector<BigRat> rem = a.coef_;
        std::vector<BigRat> quot;
        const int db = b.degree();
        while (static_cast<int>(rem.size()) - 1 >= db) {
            const int dr = static_cast<int>(rem.size()) - 1;
            BigRat f = rem.back() / b.leading();
            if (static_cast<int>(quot.size()) < dr - db + 1) quot.resize(dr - db + 1, BigRat(0));
            quot[dr - db] = f;
            for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.coef_[i];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        return {PolyT(std::move(quot)), PolyT(std::move(rem))};
    }

    BigRat evaluate(const BigRat& x) const {
        BigRat v(0);
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) v = v * x + *it;
        return v;
    }

    PolyT monic() const {
        if (is_zero()) return *this;
        std::vector<BigRat> out = coef_;
        for (auto& c : out) c /= coef_.back();
        return PolyT(std::move(out));
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            if (coef_[d] == 0) continue;
            if (!s.empty()) s += " + ";
            s += bigrat_str(coef_[d]);
            if (d >= 1) s += "*" + var + (d > 1 ? "^" + std::to_string(d) : "");
        }
        return s;
    }

private:
    std::vector<BigRat> coef_;
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
};

inline PolyT gcd(PolyT a, PolyT b) {
    while (!b.is_zero()) {
        PolyT r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// num/den with den monic and gcd(num, den) = 1.
class RatFuncT {
public:
    RatFuncT() : num_(), den_(1) {}
    RatFuncT(const BigRat& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFuncT(long c) : num_(c), den_(1) {}           // NOLINT(google-explicit-constructor)
    RatFuncT(const PolyT& p) : num_(p), den_(1) {}   // NOLINT(google-explicit-constructor)
    RatFuncT(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    static RatFuncT variable() { return RatFuncT(PolyT::variable()); }

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFuncT operator+(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncT operator-(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFuncT operator-(const RatFuncT& a) { return RatFuncT(-a.num_, a.den_); }
    friend RatFuncT operator*(const RatFuncT& a, const RatFuncT& b) {
        return RatFuncT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFuncT operator/(const RatFuncT& a, const RatFuncT& b) {
        if (b.is_zero()) throw NotDivisible("rational function division by zero");
        return RatFuncT(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFuncT& operator+=(const RatFuncT& o) { return *this = *this + o; }
    RatFuncT& operator-=(const RatFuncT& o) { return *this = *this - o; }
    RatFuncT& operator*=(const RatFuncT& o) { return *this = *this * o; }
    RatFuncT& operator/=(const RatFuncT& o) { return *this = *this / o; }
    friend bool operator==(const RatFuncT& a, const RatFuncT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    BigRat evaluate(const BigRat& x) const {
        BigRat d = den_.evaluate(x);
        if (d == 0) throw PoleAtEvaluationPoint("denominator vanishes at the evaluation point");
        return num_.evaluate(x) / d;
    }

    std::string str(const std::string& var) const {
        if (den_ == PolyT(1)) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    PolyT num_, den_;
    void reduce() {
        if (den_.is_zero()) throw NotDivisible("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = PolyT(1);
            return;
        }
        PolyT g = gcd(num_, den_);
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
        BigRat lead = den_.leading();
        if (lead != 1) {
            num_ = num_ * PolyT(BigRat(1) / lead);
            den_ = den_ * PolyT(BigRat(1) / lead);
        }
    }
};

}  // namespace mlq
