// Polynomial assembly and operator calculus: F against both computation
// routes and the published fixtures, Z symmetry/monicity and its Schur
// specializations, Hecke operator algebra, the shift operator, Cherednik
// eigenvectors, and the certified nonsymmetric polynomials.

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "mlq/macdonald.hpp"

using mlq::BigRat;
using mlq::Composition;
using mlq::QTFactor;
using mlq::QTPoly;
using mlq::QTRational;
using mlq::XPolynomial;

namespace {

XPolynomial x(int n, int i) { return XPolynomial::x(n, i); }

// (1-t) q^qshift t^tpow / (1 - q^a t^b)
QTRational pair_weight(int qshift, int tpow, int a, int b) {
    return QTRational(QTPoly::factor({0, 1}).shifted(qshift, tpow), {QTFactor{a, b}});
}

// A fixed asymmetric polynomial with mixed coefficient types, for operator
// identities that must hold on arbitrary inputs.
XPolynomial scrambled(int n) {
    XPolynomial f = XPolynomial::zero(n);
    f += XPolynomial::monomial(mlq::XMonomial(n, 0), QTRational(QTPoly::q()));
    for (int i = 1; i <= n; ++i) {
        f += x(n, i).scaled(QTRational(BigRat(i) / 3));
        f += (x(n, i) * x(n, i % n + 1)).scaled(QTRational(QTPoly::monomial(0, 1, BigRat(i))));
        f += (x(n, i) * x(n, i) * x(n, i % n + 1))
                 .scaled(QTRational(QTPoly::one() + QTPoly::monomial(i % 2, 1)));
    }
    return f;
}

bool same_at(const XPolynomial& a, const XPolynomial& b, const BigRat& q, const BigRat& t) {
    std::set<mlq::XMonomial> keys;
    for (const auto& [m, c] : a.terms()) keys.insert(m);
    for (const auto& [m, c] : b.terms()) keys.insert(m);
    for (const auto& m : keys)
        if (a.coeff(m).evaluate(q, t) != b.coeff(m).evaluate(q, t)) return false;
    return true;
}

}  // namespace

TEST_CASE("F agrees between the explicit-queue route and the batched route") {
    for (const Composition& lam :
         {Composition{2, 1, 0}, Composition{2, 2, 0}, Composition{2, 1, 1, 0},
          Composition{3, 1, 0}, Composition{2, 2, 1, 0}}) {
        auto table = mlq::weight_polynomials(lam, static_cast<int>(lam.size()));
        for (const auto& mu : mlq::rearrangements(lam)) {
            INFO("mu = " << mlq::composition_str(mu));
            CHECK(mlq::F(mu) == table.at(mu));
        }
    }
}

TEST_CASE("F fixtures") {
    SECTION("types with all parts at most 1 give a plain product of variables") {
        CHECK(mlq::F({1, 0, 1, 1}) == x(4, 1) * x(4, 3) * x(4, 4));
        CHECK(mlq::F({0, 1}) == x(2, 2));
        CHECK(mlq::F({1, 1, 1}) == x(3, 1) * x(3, 2) * x(3, 3));
    }
    SECTION("all zeros") { CHECK(mlq::F({0, 0, 0}) == XPolynomial::one(3)); }
    SECTION("published four-variable example") {
        // F_{(0,1,2,2)} = x2 x3^2 x4^2
        //               + (x1 x2 x3^2 x4 + x1 x2 x3 x4^2) t(1-t)/(1-q t^2)
        XPolynomial x1 = x(4, 1), x2 = x(4, 2), x3 = x(4, 3), x4 = x(4, 4);
        QTRational w = pair_weight(0, 1, 1, 2);
        XPolynomial expected = x2 * x3 * x3 * x4 * x4 +
                               (x1 * x2 * x3 * x3 * x4 + x1 * x2 * x3 * x4 * x4).scaled(w);
        CHECK(mlq::F({0, 1, 2, 2}) == expected);
    }
    SECTION("every F is homogeneous of the type's total") {
        for (const Composition& mu : {Composition{2, 0, 3, 1}, Composition{0, 2, 2, 1}}) {
            auto deg = mlq::F(mu).homogeneous_degree();
            REQUIRE(deg.has_value());
            CHECK(*deg == mlq::weight(mu));
        }
    }
}

TEST_CASE("Z is symmetric, monic, and matches small closed forms") {
    SECTION("degree-one shapes") {
        CHECK(mlq::Z({1, 0}) == x(2, 1) + x(2, 2));
        CHECK(mlq::Z({1, 1, 0}) ==
              x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3));
    }
    SECTION("symmetry and the leading coefficient") {
        for (const Composition& lam : {Composition{2, 1, 0}, Composition{3, 1, 0},
                                       Composition{2, 2, 1, 0}, Composition{2, 1, 1, 0}}) {
            XPolynomial z = mlq::Z(lam);
            INFO("lambda = " << mlq::composition_str(lam));
            CHECK(z.is_symmetric());
            CHECK(z.coeff(lam) == QTRational(1));
        }
    }
    SECTION("rejects non-partition input") {
        CHECK_THROWS_AS(mlq::Z({1, 2, 0}), mlq::MismatchedArity);
    }
}

TEST_CASE("Schur oracle and the q=t specialization ladder") {
    SECTION("tableau enumeration basics") {
        CHECK(mlq::schur_oracle({1}, 2) == x(2, 1) + x(2, 2));
        // s_{(2,1)} over three variables: m_{21} + 2 m_{111}
        XPolynomial x1 = x(3, 1), x2 = x(3, 2), x3 = x(3, 3);
        XPolynomial m21 = x1 * x1 * x2 + x1 * x1 * x3 + x1 * x2 * x2 + x2 * x2 * x3 +
                          x1 * x3 * x3 + x2 * x3 * x3;
        CHECK(mlq::schur_oracle({2, 1}, 3) == m21 + (x1 * x2 * x3).scaled(QTRational(2)));
        // s_{(2,2)} over three variables: m_{22} + m_{211}
        XPolynomial m22 = x1 * x1 * x2 * x2 + x1 * x1 * x3 * x3 + x2 * x2 * x3 * x3;
        XPolynomial m211 = x1 * x1 * x2 * x3 + x1 * x2 * x2 * x3 + x1 * x2 * x3 * x3;
        CHECK(mlq::schur_oracle({2, 2}, 3) == m22 + m211);
        CHECK(mlq::schur_oracle({0, 0}, 3) == XPolynomial::one(3));
    }
    SECTION("Z collapses to the Schur polynomial whenever q = t") {
        std::vector<BigRat> values = {BigRat(0), BigRat(1, 3), BigRat(2, 5), BigRat(-1, 2)};
        for (const Composition& lam : {Composition{2, 1, 0}, Composition{2, 2, 0},
                                       Composition{3, 1, 0}, Composition{2, 1, 1, 0}}) {
            XPolynomial z = mlq::Z(lam);
            XPolynomial s = mlq::schur_oracle(lam, static_cast<int>(lam.size()));
            INFO("lambda = " << mlq::composition_str(lam));
            for (const BigRat& c : values) CHECK(same_at(z, s, c, c));
        }
    }
}

TEST_CASE("Hecke operators") {
    SECTION("symmetric input is scaled by t, and by 1/t under the inverse") {
        XPolynomial f = x(3, 1) * x(3, 2) + x(3, 3) * x(3, 3) + (x(3, 1) + x(3, 2)).scaled(QTRational(QTPoly::q()));
        REQUIRE(f.symmetric_in(1));
        CHECK(mlq::hecke_T(1, f) == f.scaled(QTPoly::t()));
        CHECK(mlq::hecke_T_inverse(1, f) == f.scaled(QTRational(QTPoly::monomial(0, -1))));
    }
    SECTION("quadratic relation (T_i - t)(T_i + 1) = 0") {
        for (int n : {2, 3, 4}) {
            XPolynomial f = scrambled(n);
            for (int i = 1; i < n; ++i) {
                XPolynomial u = mlq::hecke_T(i, f) + f;
                INFO("n = " << n << " i = " << i);
                CHECK(mlq::hecke_T(i, u) == u.scaled(QTPoly::t()));
            }
        }
    }
    SECTION("braid and commutation relations") {
        XPolynomial f = scrambled(4);
        auto T = [](int i, const XPolynomial& g) { return mlq::hecke_T(i, g); };
        CHECK(T(1, T(2, T(1, f))) == T(2, T(1, T(2, f))));
        CHECK(T(2, T(3, T(2, f))) == T(3, T(2, T(3, f))));
        CHECK(T(1, T(3, f)) == T(3, T(1, f)));
    }
    SECTION("inverse really inverts") {
        XPolynomial f = scrambled(3);
        for (int i = 1; i < 3; ++i) {
            CHECK(mlq::hecke_T_inverse(i, mlq::hecke_T(i, f)) == f);
            CHECK(mlq::hecke_T(i, mlq::hecke_T_inverse(i, f)) == f);
        }
    }
    SECTION("inverse exchange on ascents") {
        auto table = mlq::weight_polynomials({2, 1, 0}, 3);
        for (const auto& [mu, f] : table)
            for (int i = 1; i < 3; ++i)
                if (mu[i - 1] < mu[i]) {
                    INFO("mu = " << mlq::composition_str(mu) << " i = " << i);
                    CHECK(mlq::hecke_T_inverse(i, f) == table.at(mlq::swap_adjacent(mu, i)));
                }
    }
}

TEST_CASE("shift operator") {
    SECTION("variable images") {
        CHECK(mlq::shift_omega(x(3, 1)) == x(3, 3).scaled(QTPoly::q()));
        CHECK(mlq::shift_omega(x(3, 2)) == x(3, 1));
        CHECK(mlq::shift_omega(x(3, 3)) == x(3, 2));
    }
    SECTION("n-fold iteration scales a homogeneous polynomial by q^degree") {
        XPolynomial f = (x(3, 1) * x(3, 2)).scaled(QTRational(QTPoly::t())) +
                        x(3, 3) * x(3, 3) + (x(3, 1) * x(3, 3)).scaled(QTRational(BigRat(5, 2)));
        XPolynomial g = f;
        for (int k = 0; k < 3; ++k) g = mlq::shift_omega(g);
        CHECK(g == f.scaled(QTRational(1).times_monomial(2, 0)));
    }
}

TEST_CASE("Cherednik operators") {
    SECTION("action on the constant polynomial") {
        for (int n : {2, 3, 4})
            for (int i = 1; i <= n; ++i) {
                INFO("n = " << n << " i = " << i);
                CHECK(mlq::cherednik_Y(i, XPolynomial::one(n)) ==
                      XPolynomial::constant(n, QTRational(1).times_monomial(0, (i - 1) - (n - i))));
            }
    }
    SECTION("pairwise commutation") {
        XPolynomial f = scrambled(3);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j) {
                INFO("i = " << i << " j = " << j);
                CHECK(mlq::cherednik_Y(i, mlq::cherednik_Y(j, f)) ==
                      mlq::cherednik_Y(j, mlq::cherednik_Y(i, f)));
            }
    }
    SECTION("eigenvalues on F of a partition") {
        for (const Composition& lam : {Composition{2, 1, 0}, Composition{2, 2, 0}}) {
            XPolynomial f = mlq::F(lam);
            for (int i = 1; i <= 3; ++i) {
                auto ev = mlq::y_eigenvalue(lam, i);
                INFO("lambda = " << mlq::composition_str(lam) << " i = " << i);
                CHECK(ev.i == i);
                CHECK(mlq::cherednik_Y(i, f) == f.scaled(ev.value));
            }
        }
        // Explicit eigenvalue values: for (2,2,0), Y_1 and Y_2 see the tied
        // pair and pick up t and 1/t respectively.
        CHECK(mlq::y_eigenvalue({2, 2, 0}, 1).value == QTRational(1).times_monomial(2, -1));
        CHECK(mlq::y_eigenvalue({2, 2, 0}, 2).value == QTRational(1).times_monomial(2, 1));
        CHECK(mlq::y_eigenvalue({2, 2, 0}, 3).value == QTRational(1));
        CHECK(mlq::y_eigenvalue({2, 1, 0}, 2).value == QTRational(QTPoly::q()));
    }
}

TEST_CASE("certified nonsymmetric polynomials") {
    SECTION("smallest cases") {
        CHECK(mlq::E_nonsymmetric({1, 0, 0}) == x(3, 1));
        CHECK(mlq::E_nonsymmetric({0, 0}) == XPolynomial::one(2));
    }
    SECTION("a partition with distinct parts") {
        XPolynomial e = mlq::E_nonsymmetric({2, 1, 0});
        CHECK(e == mlq::F({2, 1, 0}));
        CHECK(e.coeff({2, 1, 0}) == QTRational(1));
    }
    SECTION("the published six-variable example") {
        Composition lam = {2, 2, 1, 1, 0, 0};
        CHECK(mlq::enumerate_mlq(lam).size() == 7);
        CHECK(mlq::E_nonsymmetric(lam) == mlq::F(lam));
    }
    SECTION("rejects non-partition input") {
        CHECK_THROWS_AS(mlq::E_nonsymmetric({0, 1}), mlq::MismatchedArity);
    }
}
