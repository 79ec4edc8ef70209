#pragma once
// JSON import/export. Schemas are documented in the README; the rule
// throughout: positional indices (cylinder columns, tableau coordinates) are
// 1-based on the wire and 0-based in memory, part values and exponents are
// plain integers, and exact scalars travel as strings. Every exporter here
// has a matching importer and the pair round-trips bit-exactly.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "asep.hpp"
#include "composition.hpp"
#include "macdonald.hpp"
#include "mlq.hpp"
#include "qt_ring.hpp"
#include "queue_tableaux.hpp"
#include "rational.hpp"
#include "xpoly.hpp"

namespace mlq {

using Json = nlohmann::ordered_json;

// --- coefficients ----------------------------------------------------------

inline Json json_qtpoly(const QTPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e.dq, e.dt, bigrat_str(c)});
    return terms;
}

inline QTPoly qtpoly_from_json(const Json& j) {
    QTPoly p;
    for (const auto& term : j)
        p += QTPoly::monomial(term.at(0).get<int>(), term.at(1).get<int>(),
                              parse_bigrat(term.at(2).get<std::string>()));
    return p;
}

inline Json json_qtrational(const QTRational& r) {
    Json den = Json::array();
    for (const auto& f : r.den()) den.push_back({f.a, f.b});
    return Json{{"num", json_qtpoly(r.num())}, {"den", den}};
}

inline QTRational qtrational_from_json(const Json& j) {
    std::vector<QTFactor> den;
    for (const auto& f : j.at("den")) den.push_back(QTFactor{f.at(0).get<int>(), f.at(1).get<int>()});
    return QTRational(qtpoly_from_json(j.at("num")), std::move(den));
}

// --- polynomials in x ------------------------------------------------------

inline Json json_poly(const XPolynomial& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json den = Json::array();
        for (const auto& fac : c.den()) den.push_back({fac.a, fac.b});
        terms.push_back(
            Json{{"x", m}, {"num", json_qtpoly(c.num())}, {"den", std::move(den)}});
    }
    return Json{{"vars", f.n()}, {"terms", std::move(terms)}};
}

inline XPolynomial poly_from_json(const Json& j) {
    XPolynomial f(j.at("vars").get<int>());
    for (const auto& term : j.at("terms")) {
        XMonomial m = term.at("x").get<XMonomial>();
        std::vector<QTFactor> den;
        for (const auto& fac : term.at("den"))
            den.push_back(QTFactor{fac.at(0).get<int>(), fac.at(1).get<int>()});
        f.add_term(std::move(m), QTRational(qtpoly_from_json(term.at("num")), std::move(den)));
    }
    return f;
}

// --- queues ----------------------------------------------------------------

inline Json json_queue(const MultilineQueue& q) {
    Json rows = Json::array();
    for (const auto& row : q.system.rows) {
        Json cols = Json::array();
        for (int c : row) cols.push_back(c + 1);
        rows.push_back(std::move(cols));
    }
    Json matching = Json::array();
    for (int r = q.system.L; r >= 2; --r) {
        Json pairs = Json::array();
        for (const auto& [from, to] : q.matching[r]) pairs.push_back({from + 1, to + 1});
        matching.push_back(Json{{"row", r}, {"pairs", std::move(pairs)}});
    }
    Json labels = Json::array();
    for (int r = 1; r <= q.system.L; ++r) {
        Json row = Json::array();
        for (const auto& [c, lab] : q.labels[r]) row.push_back({c + 1, lab});
        labels.push_back(std::move(row));
    }
    Json events = Json::array();
    for (const auto& e : q.events)
        events.push_back(Json{{"row", e.row},
                              {"label", e.label},
                              {"from", e.from_col + 1},
                              {"to", e.to_col + 1},
                              {"skipped", e.skipped},
                              {"free", e.free_count},
                              {"wrapped", e.wrapped},
                              {"trivial", e.trivial}});
    return Json{{"n", q.system.n},          {"rows", std::move(rows)},
                {"matching", std::move(matching)}, {"type", q.type()},
                {"labels", std::move(labels)},     {"events", std::move(events)},
                {"x", wt_x(q)},                    {"qt", json_qtrational(wt_qt(q))}};
}

// Rebuilds from the defining fields (n, rows, matching); labels, events and
// weights are re-derived, so a hand-edited inconsistent file cannot parse
// into an inconsistent queue.
inline MultilineQueue queue_from_json(const Json& j) {
    BallSystem sys;
    sys.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows")) {
        std::vector<int> cols;
        for (const auto& c : row) cols.push_back(c.get<int>() - 1);
        sys.rows.push_back(std::move(cols));
    }
    sys.L = static_cast<int>(sys.rows.size());
    sys.validate();
    Matching matching(sys.L + 1);
    for (const auto& entry : j.at("matching")) {
        const int r = entry.at("row").get<int>();
        if (r < 2 || r > sys.L) throw InvalidMatching("matching row out of range");
        for (const auto& pair : entry.at("pairs"))
            matching[r][pair.at(0).get<int>() - 1] = pair.at(1).get<int>() - 1;
    }
    return MultilineQueue(std::move(sys), std::move(matching));
}

// --- tableaux ---------------------------------------------------------------

inline Json json_tableau(const QueueTableau& T) {
    Json basement = Json::array();
    for (int v : T.basement) basement.push_back(v + 1);
    Json fill = Json::array();
    for (int k = 0; k < T.n; ++k)
        for (int j = 1; j <= T.lambda[k]; ++j) fill.push_back({k + 1, j, T.entry(k, j) + 1});
    return Json{{"lambda", T.lambda}, {"basement", std::move(basement)}, {"fill", std::move(fill)}};
}

inline QueueTableau tableau_from_json(const Json& j) {
    QueueTableau T;
    T.lambda = j.at("lambda").get<Composition>();
    T.n = static_cast<int>(T.lambda.size());
    for (const auto& v : j.at("basement")) T.basement.push_back(v.get<int>() - 1);
    T.columns.assign(T.n, {});
    for (int k = 0; k < T.n; ++k) T.columns[k].assign(T.lambda[k], -1);
    for (const auto& box : j.at("fill")) {
        const int k = box.at(0).get<int>() - 1;
        const int j_row = box.at(1).get<int>();
        if (k < 0 || k >= T.n || j_row < 1 || j_row > T.lambda[k])
            throw IndexOutOfRange("tableau box outside the diagram");
        T.columns[k][j_row - 1] = box.at(2).get<int>() - 1;
    }
    for (int k = 0; k < T.n; ++k)
        for (int v : T.columns[k])
            if (v < 0) throw MismatchedArity("tableau fill misses a box");
    return T;
}

// --- reports ----------------------------------------------------------------

inline Json json_qkz_report(const QKZReport& rep) {
    Json identities = Json::object();
    for (const auto& [name, counts] : rep.tally())
        identities[name] = Json{{"passed", counts.first}, {"total", counts.second}};
    Json failures = Json::array();
    for (const auto& c : rep.checks)
        if (!c.pass)
            failures.push_back(Json{{"identity", c.identity}, {"mu", c.mu}, {"i", c.i}});
    return Json{{"type", rep.lambda},
                {"identities", std::move(identities)},
                {"failed", rep.failed},
                {"failures", std::move(failures)}};
}

inline Json json_stationary(const StationaryVector& sv) {
    Json states = Json::array();
    for (const auto& s : sv.space.states) states.push_back(s);
    Json pi = Json::array();
    for (const auto& p : sv.pi) pi.push_back(bigrat_str(p));
    return Json{{"lambda", sv.space.lambda},
                {"t", bigrat_str(sv.t)},
                {"states", std::move(states)},
                {"pi", std::move(pi)}};
}

inline Json json_martin_report(const MartinReport& rep) {
    return Json{{"lambda", rep.lambda},
                {"t", rep.symbolic ? std::string("t") : bigrat_str(rep.t)},
                {"symbolic", rep.symbolic},
                {"states", rep.state_count},
                {"pairs_checked", rep.pairs_checked},
                {"ok", rep.ok},
                {"detail", rep.detail}};
}

}  // namespace mlq
