// Family-level exchange and cyclicity relations: the full report over small
// shapes, its tally structure, a corrupted-family negative control, and the
// cyclic-shift law tied directly to the explicit-queue route.

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "mlq/macdonald.hpp"

using mlq::Composition;
using mlq::QTPoly;
using mlq::QTRational;
using mlq::XPolynomial;

TEST_CASE("families built from queue weights") {
    for (const Composition& lam : {Composition{2, 1, 0}, Composition{2, 2, 0}}) {
        auto fam = mlq::QKZFamily::build(lam);
        CHECK(fam.lambda == lam);
        std::set<Composition> expect;
        for (const auto& mu : mlq::rearrangements(lam)) expect.insert(mu);
        std::set<Composition> got;
        for (const auto& [mu, f] : fam.members) {
            got.insert(mu);
            auto deg = f.homogeneous_degree();
            REQUIRE(deg.has_value());
            CHECK(*deg == mlq::weight(lam));
            CHECK(f == mlq::F(mu));
        }
        CHECK(got == expect);
    }
    CHECK_THROWS_AS(mlq::QKZFamily::build({0, 1}), mlq::MismatchedArity);
}

TEST_CASE("relation report passes on queue families") {
    SECTION("single-row shape") {
        auto rep = mlq::check_qkz({1, 1, 0});
        CHECK(rep.all_pass());
        CHECK(rep.failed == 0);
        auto tally = rep.tally();
        CHECK(tally.at("cyclic-shift") == std::pair<int, int>{3, 3});
        CHECK(tally.at("equal-scaling") == std::pair<int, int>{2, 2});
        CHECK(tally.at("exchange") == std::pair<int, int>{2, 2});
    }
    SECTION("distinct parts") {
        auto rep = mlq::check_qkz({2, 1, 0});
        CHECK(rep.all_pass());
        auto tally = rep.tally();
        CHECK(tally.at("exchange") == std::pair<int, int>{6, 6});
        CHECK(tally.at("exchange-linear") == std::pair<int, int>{6, 6});
        CHECK(tally.at("twisted-symmetry") == std::pair<int, int>{6, 6});
        CHECK(tally.at("sum-symmetry") == std::pair<int, int>{12, 12});
        CHECK(tally.at("cyclic-shift") == std::pair<int, int>{6, 6});
        CHECK(tally.count("equal-scaling") == 0);
    }
    SECTION("repeated parts across six variables") {
        auto rep = mlq::check_qkz({2, 2, 1, 1, 0, 0});
        CHECK(rep.all_pass());
        // 6!/(2!2!2!) rearrangements, one cyclic check each
        CHECK(rep.tally().at("cyclic-shift").second == 90);
    }
    SECTION("sweep of shapes inside a 4-variable box") {
        for (const auto& lam : mlq::partitions_inside({2, 2, 1, 0})) {
            INFO("lambda = " << mlq::composition_str(lam));
            CHECK(mlq::check_qkz(lam).all_pass());
        }
    }
}

TEST_CASE("the report detects a corrupted family") {
    Composition lam = {2, 1, 0};
    auto fam = mlq::weight_polynomials(lam, 3);
    REQUIRE(mlq::check_qkz(lam, fam).all_pass());

    SECTION("scaling one member breaks exchange but not its own symmetry") {
        fam.at({1, 2, 0}) = fam.at({1, 2, 0}).scaled(QTPoly::t());
        auto rep = mlq::check_qkz(lam, fam);
        CHECK_FALSE(rep.all_pass());
        CHECK(rep.failed > 0);
    }
    SECTION("swapping two members is caught") {
        std::swap(fam.at({2, 0, 1}), fam.at({0, 2, 1}));
        CHECK_FALSE(mlq::check_qkz(lam, fam).all_pass());
    }
}

TEST_CASE("cyclic-shift law on the explicit-queue route") {
    // q^{mu_n} F_mu(x) = F_{mu_n, mu_1, ...}(q x_n, x_1, ..., x_{n-1}),
    // with F computed queue by queue. Individual queue weights are not
    // matched up by the shift, but the polynomials are.
    for (const Composition& mu :
         {Composition{2, 2, 0, 0}, Composition{0, 2, 2, 0}, Composition{2, 0, 1},
          Composition{1, 0, 2}, Composition{3, 1, 0}, Composition{0, 1, 2, 2}}) {
        INFO("mu = " << mlq::composition_str(mu));
        CHECK(mlq::shift_omega(mlq::F(mlq::cyclic_right(mu))) ==
              mlq::F(mu).scaled(QTRational(1).times_monomial(mu.back(), 0)));
    }
}
