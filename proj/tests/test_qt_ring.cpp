#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mlq/qt_ring.hpp"

using namespace mlq;

namespace {

constexpr int kIterations = 300;

QTPoly random_poly(std::mt19937& rng, bool laurent = true) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> expo(laurent ? -3 : 0, 5);
    std::uniform_int_distribution<int> coef(-5, 5);
    QTPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(expo(rng), expo(rng), BigRat(coef(rng)));
    return p;
}

QTFactor random_factor(std::mt19937& rng) {
    static const QTFactor pool[] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}, {1, 4}, {2, 4}};
    std::uniform_int_distribution<size_t> pick(0, std::size(pool) - 1);
    return pool[pick(rng)];
}

QTRational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> nden(0, 2);
    std::vector<QTFactor> den;
    int k = nden(rng);
    for (int i = 0; i < k; ++i) den.push_back(random_factor(rng));
    return QTRational(random_poly(rng), den);
}

const QTFactor kQT2{1, 2};  // 1 - q t^2
const QTFactor kQT3{1, 3};  // 1 - q t^3
const QTFactor kQT{1, 1};   // 1 - q t

QTPoly one_minus_t() { return QTPoly::one() - QTPoly::t(); }

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    QTPoly p = QTPoly::q() + QTPoly::t();
    QTPoly sq = p * p;
    QTPoly expect;
    expect.add_term(2, 0, 1);
    expect.add_term(1, 1, 2);
    expect.add_term(0, 2, 1);
    CHECK(sq == expect);
    CHECK((p - p).is_zero());
    CHECK(QTPoly::factor({1, 2}).str() == "1 - q*t^2");
    CHECK(QTPoly::monomial(-1, 2, BigRat(-3)).str() == "-3*q^-1*t^2");
}

TEST_CASE("exact division by binomial factors") {
    std::mt19937 rng(20240817);
    // (g * (1 - q^a t^b)) / (1 - q^a t^b) == g
    for (int it = 0; it < kIterations; ++it) {
        QTPoly g = random_poly(rng);
        QTFactor f = random_factor(rng);
        auto back = (g * QTPoly::factor(f)).divided_by(f);
        REQUIRE(back.has_value());
        CHECK(*back == g);
    }
    // 1 - q^2 t^4 = (1 - q t^2)(1 + q t^2)
    auto quot = QTPoly::factor({2, 4}).divided_by(kQT2);
    REQUIRE(quot.has_value());
    CHECK(*quot == QTPoly::one() + QTPoly::monomial(1, 2));
    // 1 - q t is not divisible by 1 - t
    CHECK_FALSE(QTPoly::factor({1, 1}).divided_by({0, 1}).has_value());
    CHECK_FALSE((QTPoly::q() + QTPoly::t()).divided_by({1, 1}).has_value());
}

TEST_CASE("rational identities from fixed expressions") {
    QTRational a(one_minus_t(), {kQT2});

    // additive identity
    CHECK(qt_equals(qt_add(a, QTRational(0)), a));

    // [(1-t)/(1-qt)] * [(1-qt)/1] = 1-t, by factor cancellation
    QTRational b(one_minus_t(), {kQT});
    QTRational c(QTPoly::factor(kQT));
    QTRational prod = qt_mul(b, c);
    CHECK(prod.den().empty());
    CHECK(qt_equals(prod, QTRational(one_minus_t())));

    // (1-t)/(1-qt^2) * t(1-t)/(1-qt^3) = t(1-t)^2/((1-qt^2)(1-qt^3))
    QTRational lhs = qt_mul(a, QTRational(one_minus_t().shifted(0, 1), {kQT3}));
    QTRational rhs(one_minus_t() * one_minus_t().shifted(0, 1), {kQT2, kQT3});
    CHECK(qt_equals(lhs, rhs));
    BigRat q(2), t(3);
    CHECK(lhs.evaluate(q, t) == rhs.evaluate(q, t));

    // (1-t)/(1-t) = 1; t/(1-qt) != t/(1-qt^2); (1-t^2)/(1-t) = 1+t
    CHECK(qt_equals(QTRational(one_minus_t(), {{0, 1}}), QTRational(1)));
    QTRational t_over1(QTPoly::t(), {kQT});
    QTRational t_over2(QTPoly::t(), {kQT2});
    CHECK_FALSE(qt_equals(t_over1, t_over2));
    CHECK(qt_equals(QTRational(QTPoly::factor({0, 2}), {{0, 1}}),
                    QTRational(QTPoly::one() + QTPoly::t())));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(987654);
    for (int it = 0; it < kIterations; ++it) {
        QTRational a = random_rational(rng);
        QTRational b = random_rational(rng);
        QTRational c = random_rational(rng);
        CHECK(qt_equals(qt_add(a, b), qt_add(b, a)));
        CHECK(qt_equals(qt_mul(a, b), qt_mul(b, a)));
        CHECK(qt_equals(qt_add(qt_add(a, b), c), qt_add(a, qt_add(b, c))));
        CHECK(qt_equals(qt_mul(qt_mul(a, b), c), qt_mul(a, qt_mul(b, c))));
        CHECK(qt_equals(qt_mul(a, qt_add(b, c)), qt_add(qt_mul(a, b), qt_mul(a, c))));
        CHECK(qt_equals(qt_add(a, qt_neg(a)), QTRational(0)));
    }
}

TEST_CASE("canonicalization is idempotent and strips dividing factors") {
    std::mt19937 rng(5551212);
    for (int it = 0; it < kIterations; ++it) {
        QTPoly g = random_poly(rng);
        QTFactor f = random_factor(rng);
        // Constructed with a cancelable factor on both sides.
        QTRational r(g * QTPoly::factor(f), {f, random_factor(rng)});
        QTRational again(r.num(), r.den());
        CHECK(r.num() == again.num());
        CHECK(r.den() == again.den());
        // The dividing factor must have been cancelled unless num is zero or
        // the other factor happened to divide further; either way no den
        // factor divides num.
        for (const auto& d : r.den()) CHECK_FALSE(r.num().divided_by(d).has_value());
    }
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
    std::mt19937 rng(424242);
    const BigRat q(2, 3), t(3, 5);  // inside (0,1): every 1 - q^a t^b is positive
    for (int it = 0; it < kIterations; ++it) {
        QTRational a = random_rational(rng);
        QTRational b = random_rational(rng);
        CHECK(qt_add(a, b).evaluate(q, t) == a.evaluate(q, t) + b.evaluate(q, t));
        CHECK(qt_mul(a, b).evaluate(q, t) == a.evaluate(q, t) * b.evaluate(q, t));
    }
}

TEST_CASE("poles are detected") {
    QTRational r(one_minus_t(), {kQT2});
    CHECK_THROWS_AS(r.evaluate(BigRat(1), BigRat(1)), PoleAtEvaluationPoint);
    CHECK(r.evaluate(BigRat(1), BigRat(1, 2)) == BigRat(1, 2) / (BigRat(1) - BigRat(1, 4)));
    // Laurent numerators: negative powers of the variables need nonzero bases.
    QTRational laurent = QTRational(1).times_monomial(0, -1);
    CHECK(laurent.evaluate(BigRat(1), BigRat(1, 2)) == BigRat(2));
    CHECK_THROWS_AS(laurent.evaluate(BigRat(1), BigRat(0)), PoleAtEvaluationPoint);
}

TEST_CASE("weight-shaped products keep structured denominators") {
    // (1-t)t/(1-qt^4) * (1-t)/(1-q^2 t^4) * (1-t)t^2/(1-qt^3) * q * (1-t)/(1-qt^2)
    QTRational w = QTRational(one_minus_t().shifted(0, 1), {{1, 4}});
    w *= QTRational(one_minus_t(), {{2, 4}});
    w *= QTRational(one_minus_t().shifted(0, 2), {{1, 3}});
    w = w.times_monomial(1, 0);
    w *= QTRational(one_minus_t(), {kQT2});
    CHECK(w.den() == std::vector<QTFactor>{{1, 2}, {1, 3}, {1, 4}, {2, 4}});
    const BigRat q(1, 2), t(1, 3);
    BigRat expect = (BigRat(1) - t) * t / (BigRat(1) - q * pow_bigrat(t, 4));
    expect *= (BigRat(1) - t) / (BigRat(1) - q * q * pow_bigrat(t, 4));
    expect *= (BigRat(1) - t) * t * t / (BigRat(1) - q * pow_bigrat(t, 3));
    expect *= q * (BigRat(1) - t) / (BigRat(1) - q * t * t);
    CHECK(w.evaluate(q, t) == expect);
}

TEST_CASE("serialization order is graded lex") {
    QTPoly p;
    p.add_term(0, 2, 1);
    p.add_term(2, 0, 1);
    p.add_term(1, 1, 1);
    p.add_term(0, 0, 5);
    CHECK(p.str() == "5 + t^2 + q*t + q^2");
    // q-degree helpers used by the trace stabilization certificate
    CHECK(p.min_q_degree() == 0);
    CHECK(p.truncated_q(1) == (QTPoly(5) + QTPoly::monomial(0, 2)));
}
