// Queue tableaux: basement construction, the attacking predicate, the worked
// three-row tableau and its statistics, the three fillings of type (0,1,2,2),
// the chain bijection, and the sum identity against F.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "mlq/macdonald.hpp"
#include "mlq/queue_tableaux.hpp"

using mlq::BallSystem;
using mlq::Composition;
using mlq::Matching;
using mlq::MultilineQueue;
using mlq::QTFactor;
using mlq::QTPoly;
using mlq::QTRational;
using mlq::QueueTableau;
using mlq::XMonomial;
using mlq::XPolynomial;

namespace {

MultilineQueue make_queue(int L, int n, std::vector<std::vector<int>> rows,
                          std::map<int, std::map<int, int>> pairs) {
    BallSystem sys;
    sys.L = L;
    sys.n = n;
    sys.rows = std::move(rows);
    Matching m(L + 1);
    for (auto& [r, p] : pairs) m[r] = std::move(p);
    return MultilineQueue(std::move(sys), std::move(m));
}

// (1-t) q^qshift t^tpow / (1 - q^a t^b)
QTRational pair_weight(int qshift, int tpow, int a, int b) {
    return QTRational(QTPoly::factor({0, 1}).shifted(qshift, tpow), {QTFactor{a, b}});
}

}  // namespace

TEST_CASE("canonical basement ordering") {
    CHECK(mlq::tableau_basement({0, 1, 2, 2}) == std::vector<int>{2, 3, 1, 0});
    CHECK(mlq::tableau_basement({2, 2, 0, 0, 0, 3, 2, 1}) ==
          std::vector<int>{5, 0, 1, 6, 7, 2, 3, 4});
    // Equal parts read their positions left to right.
    CHECK(mlq::tableau_basement({1, 1, 1}) == std::vector<int>{0, 1, 2});
    CHECK(mlq::tableau_basement({0, 2, 0, 2}) == std::vector<int>{1, 3, 0, 2});

    CHECK_THROWS_AS(mlq::enumerate_qt({2, 1, 0}, {0, 0, 1}), mlq::MismatchedArity);
    CHECK_THROWS_AS(mlq::enumerate_qt({2, 1, 0}, {0, 1}), mlq::MismatchedArity);
    CHECK_THROWS_AS(mlq::enumerate_qt({1, 2, 0}, {1, 0, 2}), mlq::MismatchedArity);
    // Equal-height columns must read their basements in increasing order.
    CHECK_THROWS_AS(mlq::enumerate_qt({2, 2, 0}, {1, 0, 2}), mlq::MismatchedArity);
}

TEST_CASE("attacking boxes") {
    const Composition lam = {2, 2, 1, 0};
    CHECK(mlq::attacking(lam, 0, 1, 1, 1));   // same row
    CHECK(mlq::attacking(lam, 1, 1, 0, 1));   // same row, symmetric
    CHECK(!mlq::attacking(lam, 0, 2, 0, 1));  // box directly below
    CHECK(mlq::attacking(lam, 0, 2, 1, 1));   // row below, to the right
    CHECK(mlq::attacking(lam, 0, 1, 2, 0));   // basement row, to the right
    CHECK(mlq::attacking(lam, 1, 2, 0, 1));   // row below left, equal heights
    CHECK(!mlq::attacking(lam, 2, 1, 0, 0));  // row below left, taller column
    CHECK(!mlq::attacking(lam, 0, 2, 2, 0));  // rows two apart
}

TEST_CASE("worked three-row tableau") {
    // Same cylinder as the worked queue fixture: three rows on eight columns.
    const MultilineQueue q =
        make_queue(3, 8, {{0, 1, 5, 6, 7}, {1, 3, 4, 5}, {2}},
                   {{3, {{2, 4}}}, {2, {{1, 1}, {4, 5}, {5, 0}, {3, 6}}}});
    const QueueTableau T = mlq::tab_bijection(q);

    QueueTableau expected;
    expected.n = 8;
    expected.lambda = {3, 2, 2, 2, 1, 0, 0, 0};
    expected.basement = {5, 0, 1, 6, 7, 2, 3, 4};
    expected.columns = {{5, 4, 2}, {0, 5}, {1, 1}, {6, 3}, {7}, {}, {}, {}};
    REQUIRE(T == expected);

    // Row 1 always repeats the basement; the only higher restricted box here
    // is the straight-down chain in column 2.
    for (int k = 0; k < 5; ++k) CHECK(T.restricted(k, 1));
    CHECK(T.restricted(2, 2));
    CHECK(!T.restricted(0, 2));
    CHECK(!T.restricted(0, 3));
    CHECK(!T.restricted(1, 2));
    CHECK(!T.restricted(3, 2));

    CHECK(mlq::tableau_leg(T, 0, 2) == 1);
    CHECK(mlq::tableau_leg(T, 0, 3) == 0);
    CHECK(mlq::tableau_leg(T, 1, 2) == 0);
    CHECK(mlq::tableau_leg(T, 3, 2) == 0);

    // The column-0 row-2 box sees every shorter column with a row-1 box, the
    // straight-down column included; the column-1 row-2 box sees the shortest
    // column plus the later-pairing column 3.
    CHECK(mlq::tableau_arm(T, 0, 2) == 4);
    CHECK(mlq::tableau_arm(T, 0, 3) == 3);
    CHECK(mlq::tableau_arm(T, 1, 2) == 2);
    CHECK(mlq::tableau_arm(T, 3, 2) == 1);

    CHECK(mlq::tableau_maj(T) == 1);
    CHECK(mlq::tableau_coinv(T) == 3);

    QTRational expected_wt = pair_weight(0, 1, 1, 4);  // row 3 strand
    expected_wt *= pair_weight(0, 0, 2, 5);            // tall column, row 2
    expected_wt *= pair_weight(1, 2, 1, 3);            // wrapping strand
    expected_wt *= pair_weight(0, 0, 1, 2);            // last strand
    CHECK(mlq::tableau_weight(T) == expected_wt);
    CHECK(mlq::tableau_weight(T) == mlq::wt_qt(q));
    CHECK(mlq::tableau_monomial(T) == mlq::wt_x(q));
}

TEST_CASE("the three fillings of type (0,1,2,2)") {
    const Composition mu = {0, 1, 2, 2};
    const auto tabs = mlq::enumerate_qt(mu);
    REQUIRE(tabs.size() == 3);

    std::vector<std::vector<std::vector<int>>> expected_cols = {
        {{2, 0}, {3, 3}, {1}, {}},
        {{2, 2}, {3, 0}, {1}, {}},
        {{2, 2}, {3, 3}, {1}, {}},
    };
    for (std::size_t idx = 0; idx < tabs.size(); ++idx) {
        CHECK(tabs[idx].lambda == Composition{2, 2, 1, 0});
        CHECK(tabs[idx].basement == std::vector<int>{2, 3, 1, 0});
        CHECK(tabs[idx].columns == expected_cols[idx]);
    }

    // The all-restricted filling weighs 1; the other two each weigh
    // t(1-t)/(1-qt^2) on their own monomial.
    const QTRational hook = pair_weight(0, 1, 1, 2);
    CHECK(mlq::tableau_weight(tabs[0]) == hook);
    CHECK(mlq::tableau_weight(tabs[1]) == hook);
    CHECK(mlq::tableau_weight(tabs[2]) == QTRational(1));
    CHECK(mlq::tableau_monomial(tabs[0]) == XMonomial{1, 1, 1, 2});
    CHECK(mlq::tableau_monomial(tabs[1]) == XMonomial{1, 1, 2, 1});
    CHECK(mlq::tableau_monomial(tabs[2]) == XMonomial{0, 1, 2, 2});

    CHECK(mlq::tableau_sum(mu) == mlq::F(mu));
}

TEST_CASE("single box propagates the basement") {
    const auto tabs = mlq::enumerate_qt(Composition{0, 1, 0});
    REQUIRE(tabs.size() == 1);
    CHECK(tabs[0].columns == std::vector<std::vector<int>>{{1}, {}, {}});
    CHECK(mlq::tableau_weight(tabs[0]) == QTRational(1));
    CHECK(mlq::tableau_sum({0, 1, 0}) == XPolynomial::monomial({0, 1, 0}, QTRational(1)));

    // No boxes at all: the empty filling with weight 1.
    const auto empty = mlq::enumerate_qt(Composition{0, 0});
    REQUIRE(empty.size() == 1);
    CHECK(mlq::tableau_sum({0, 0}) == XPolynomial::constant(2, QTRational(1)));
}

TEST_CASE("fillings match queues over small cylinders") {
    std::vector<Composition> boxes = {{3}, {2, 2}, {3, 2, 1}, {3, 2, 1, 0}};
    for (const auto& box : boxes) {
        for (const auto& lam : mlq::partitions_inside(box)) {
            for (const auto& mu : mlq::rearrangements(lam)) {
                INFO("mu = " << mlq::composition_str(mu));
                const auto queues = mlq::enumerate_mlq(mu);
                const auto tabs = mlq::enumerate_qt(mu);
                REQUIRE(tabs.size() == queues.size());

                std::vector<QueueTableau> images;
                images.reserve(queues.size());
                for (const auto& q : queues) {
                    QueueTableau T = mlq::tab_bijection(q);
                    int wrapped_powers = 0;
                    int skipped = 0;
                    for (const auto& e : q.events) {
                        if (e.wrapped) wrapped_powers += e.label - e.row + 1;
                        skipped += e.skipped;
                    }
                    CHECK(mlq::tableau_maj(T) == wrapped_powers);
                    CHECK(mlq::tableau_coinv(T) == skipped);
                    CHECK(mlq::tableau_weight(T) == mlq::wt_qt(q));
                    CHECK(mlq::tableau_monomial(T) == mlq::wt_x(q));
                    images.push_back(std::move(T));
                }
                std::sort(images.begin(), images.end());
                CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
                CHECK(images == tabs);
                CHECK(mlq::tableau_sum(mu) == mlq::F(mu));
            }
        }
    }
}
