// Batch front-end: enumerate cylinders, compute weight polynomials, verify
// the exchange/eigenvector/stationarity properties, and export everything as
// deterministic text or JSON. Exit codes: 0 success (including all-pass
// verification), 2 verification failure, 1 usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "mlq/asep.hpp"
#include "mlq/composition.hpp"
#include "mlq/errors.hpp"
#include "mlq/json_io.hpp"
#include "mlq/macdonald.hpp"
#include "mlq/matrix_ansatz.hpp"
#include "mlq/mlq.hpp"
#include "mlq/queue_tableaux.hpp"
#include "mlq/render.hpp"
#include "mlq/xpoly.hpp"

namespace {

using mlq::Json;

struct Options {
    std::string mu_raw;
    std::string lambda_raw;
    std::string t_raw;
    std::string q_raw;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 1;
    long steps = 0;
    int trunc = 0;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw mlq::MismatchedArity("cannot open output file " + opt.out_path);
    f << text;
}

void emit_json(const Options& opt, const Json& j) { emit(opt, j.dump(2) + "\n"); }

bool json_mode(const Options& opt) { return opt.format == "json"; }

mlq::Composition need_mu(const Options& opt) {
    if (opt.mu_raw.empty()) throw mlq::MismatchedArity("--mu is required");
    return mlq::parse_composition(opt.mu_raw);
}

mlq::Composition need_lambda(const Options& opt) {
    if (opt.lambda_raw.empty()) throw mlq::MismatchedArity("--lambda is required");
    mlq::Composition lambda = mlq::parse_composition(opt.lambda_raw);
    if (!mlq::is_partition(lambda))
        throw mlq::MismatchedArity("--lambda must be weakly decreasing");
    return lambda;
}

std::string poly_value_line(const mlq::XPolynomial& f, const Options& opt) {
    if (opt.q_raw.empty() || opt.t_raw.empty()) return "";
    const mlq::BigRat q = mlq::parse_bigrat(opt.q_raw);
    const mlq::BigRat t = mlq::parse_bigrat(opt.t_raw);
    const std::vector<mlq::BigRat> ones(f.n(), mlq::BigRat(1));
    return "at x = 1, q = " + mlq::bigrat_str(q) + ", t = " + mlq::bigrat_str(t) + ": " +
           mlq::bigrat_str(f.evaluate(ones, q, t)) + "\n";
}

void poly_value_json(const mlq::XPolynomial& f, const Options& opt, Json& j) {
    if (opt.q_raw.empty() || opt.t_raw.empty()) return;
    const mlq::BigRat q = mlq::parse_bigrat(opt.q_raw);
    const mlq::BigRat t = mlq::parse_bigrat(opt.t_raw);
    const std::vector<mlq::BigRat> ones(f.n(), mlq::BigRat(1));
    j["value_at_ones"] = Json{{"q", mlq::bigrat_str(q)},
                              {"t", mlq::bigrat_str(t)},
                              {"value", mlq::bigrat_str(f.evaluate(ones, q, t))}};
}

int cmd_enumerate(const Options& opt) {
    const mlq::Composition mu = need_mu(opt);
    const auto queues = mlq::enumerate_mlq(mu);
    if (json_mode(opt)) {
        Json arr = Json::array();
        for (const auto& q : queues) arr.push_back(mlq::json_queue(q));
        emit_json(opt, Json{{"mu", mu}, {"count", queues.size()}, {"queues", std::move(arr)}});
        return 0;
    }
    std::string out = "type " + mlq::composition_str(mu) + ": " +
                      std::to_string(queues.size()) + " queues\n";
    for (const auto& q : queues) {
        out += "\n" + mlq::render_queue(q);
        out += "x-weight " + mlq::XPolynomial::monomial(mlq::wt_x(q), mlq::QTRational(1)).str() +
               ", qt-weight " + mlq::wt_qt(q).str() + "\n";
    }
    emit(opt, out);
    return 0;
}

int cmd_fmu(const Options& opt) {
    const mlq::Composition mu = need_mu(opt);
    const mlq::XPolynomial f = mlq::F(mu);
    if (json_mode(opt)) {
        Json j{{"mu", mu}, {"poly", mlq::json_poly(f)}};
        poly_value_json(f, opt, j);
        emit_json(opt, j);
        return 0;
    }
    emit(opt, f.str() + "\n" + poly_value_line(f, opt));
    return 0;
}

int cmd_zlambda(const Options& opt) {
    const mlq::Composition lambda = need_lambda(opt);
    const mlq::XPolynomial z = mlq::Z(lambda);
    if (json_mode(opt)) {
        Json j{{"lambda", lambda}, {"poly", mlq::json_poly(z)}};
        poly_value_json(z, opt, j);
        emit_json(opt, j);
        return 0;
    }
    emit(opt, z.str() + "\n" + poly_value_line(z, opt));
    return 0;
}

int cmd_nonsym(const Options& opt) {
    const mlq::Composition lambda = need_lambda(opt);
    const int n = static_cast<int>(lambda.size());
    mlq::XPolynomial f = mlq::XPolynomial::zero(n);
    std::string failure;
    try {
        f = mlq::E_nonsymmetric(lambda);
    } catch (const mlq::CharacterizationFailed& e) {
        failure = e.what();
    }
    if (json_mode(opt)) {
        Json j{{"lambda", lambda}, {"ok", failure.empty()}};
        if (failure.empty()) {
            j["poly"] = mlq::json_poly(f);
            Json eig = Json::array();
            for (int i = 1; i <= n; ++i)
                eig.push_back(Json{{"i", i},
                                   {"value", mlq::json_qtrational(
                                                 mlq::y_eigenvalue(lambda, i).value)}});
            j["eigenvalues"] = std::move(eig);
        } else {
            j["detail"] = failure;
        }
        emit_json(opt, j);
        return failure.empty() ? 0 : 2;
    }
    if (!failure.empty()) {
        emit(opt, "FAIL: " + failure + "\n");
        return 2;
    }
    std::string out = f.str() + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (int i = 1; i <= n; ++i)
        rows.emplace_back("Y_" + std::to_string(i) + " eigenvalue",
                          mlq::y_eigenvalue(lambda, i).value.str());
    out += mlq::render_table(rows);
    out += "monic eigenvector checks passed\n";
    emit(opt, out);
    return 0;
}

int cmd_verify_qkz(const Options& opt) {
    const mlq::Composition lambda = need_lambda(opt);
    const mlq::QKZReport rep = mlq::check_qkz(lambda);
    if (json_mode(opt)) {
        emit_json(opt, mlq::json_qkz_report(rep));
        return rep.all_pass() ? 0 : 2;
    }
    std::string out = "type " + mlq::composition_str(lambda) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [name, counts] : rep.tally())
        rows.emplace_back(name, std::to_string(counts.first) + "/" +
                                    std::to_string(counts.second) + " pass");
    out += mlq::render_table(rows);
    out += rep.all_pass() ? "all checks passed\n"
                          : std::to_string(rep.failed) + " checks FAILED\n";
    emit(opt, out);
    return rep.all_pass() ? 0 : 2;
}

int cmd_tableaux(const Options& opt) {
    const mlq::Composition mu = need_mu(opt);
    const auto ts = mlq::enumerate_qt(mu);
    if (json_mode(opt)) {
        Json arr = Json::array();
        for (const auto& T : ts) {
            Json j = mlq::json_tableau(T);
            j["x"] = mlq::tableau_monomial(T);
            j["qt"] = mlq::json_qtrational(mlq::tableau_weight(T));
            arr.push_back(std::move(j));
        }
        emit_json(opt, Json{{"mu", mu}, {"count", ts.size()}, {"tableaux", std::move(arr)}});
        return 0;
    }
    std::string out = "type " + mlq::composition_str(mu) + ": " + std::to_string(ts.size()) +
                      " tableaux\n";
    for (const auto& T : ts) {
        out += "\n" + mlq::render_tableau(T);
        out += "x-weight " +
               mlq::XPolynomial::monomial(mlq::tableau_monomial(T), mlq::QTRational(1)).str() +
               ", qt-weight " + mlq::tableau_weight(T).str() + "\n";
    }
    emit(opt, out);
    return 0;
}

int cmd_stationary(const Options& opt) {
    const mlq::Composition lambda = need_lambda(opt);
    if (opt.t_raw.empty()) {
        if (opt.steps > 0)
            throw mlq::MismatchedArity("--steps needs a numeric --t");
        const auto pi = mlq::stationary_symbolic(lambda);
        const auto states = mlq::make_state_space(lambda).states;
        if (json_mode(opt)) {
            Json jstates = Json::array();
            for (const auto& s : states) jstates.push_back(s);
            Json jpi = Json::array();
            for (const auto& p : pi) jpi.push_back(p.str("t"));
            emit_json(opt, Json{{"lambda", lambda},
                                {"t", "t"},
                                {"states", std::move(jstates)},
                                {"pi", std::move(jpi)}});
            return 0;
        }
        std::vector<std::pair<std::string, std::string>> rows;
        for (size_t s = 0; s < states.size(); ++s)
            rows.emplace_back(mlq::composition_str(states[s]), pi[s].str("t"));
        emit(opt, "stationary distribution, symbolic t\n" + mlq::render_table(rows));
        return 0;
    }

    const mlq::BigRat t = mlq::parse_bigrat(opt.t_raw);
    const mlq::StationaryVector sv = mlq::stationary(lambda, t);
    std::optional<mlq::SimulationResult> sim;
    if (opt.steps > 0) sim = mlq::simulate(lambda, t, opt.steps, opt.seed);
    if (json_mode(opt)) {
        Json j = mlq::json_stationary(sv);
        if (sim) {
            Json visits = Json::array();
            for (long v : sim->visits) visits.push_back(v);
            j["simulation"] = Json{{"steps", sim->steps},
                                   {"seed", opt.seed},
                                   {"visits", std::move(visits)}};
        }
        emit_json(opt, j);
        return 0;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (size_t s = 0; s < sv.space.states.size(); ++s) {
        std::string right = mlq::bigrat_str(sv.pi[s]);
        if (sim)
            right += "   (visited " + std::to_string(sim->visits[s]) + "/" +
                     std::to_string(sim->steps) + ")";
        rows.emplace_back(mlq::composition_str(sv.space.states[s]), right);
    }
    emit(opt, "stationary distribution at t = " + mlq::bigrat_str(t) + "\n" +
                  mlq::render_table(rows));
    return 0;
}

int cmd_martin_check(const Options& opt) {
    const mlq::Composition lambda = need_lambda(opt);
    const mlq::MartinReport rep = opt.t_raw.empty()
                                      ? mlq::martin_check_symbolic(lambda)
                                      : mlq::martin_check(lambda, mlq::parse_bigrat(opt.t_raw));
    if (json_mode(opt)) {
        emit_json(opt, mlq::json_martin_report(rep));
        return rep.ok ? 0 : 2;
    }
    std::string out = "type " + mlq::composition_str(lambda) + ", t = " +
                      (rep.symbolic ? std::string("symbolic") : mlq::bigrat_str(rep.t)) + ": " +
                      std::to_string(rep.state_count) + " states, " +
                      std::to_string(rep.pairs_checked) + " ratio pairs";
    out += rep.ok ? ", all match\n" : ", MISMATCH: " + rep.detail + "\n";
    emit(opt, out);
    return rep.ok ? 0 : 2;
}

int cmd_ansatz(const Options& opt) {
    const mlq::Composition lambda = need_lambda(opt);
    const int n = static_cast<int>(lambda.size());
    const auto fam_f = mlq::weight_polynomials(lambda, n);
    const auto fam_y = mlq::trace_family(lambda);
    const mlq::XPolynomial& y0 = fam_y.at(lambda);
    const mlq::XPolynomial& f0 = fam_f.at(lambda);

    int proportional = 0;
    for (const auto& [mu, y] : fam_y)
        if (y * f0 == y0 * fam_f.at(mu)) ++proportional;
    const bool prop_ok = proportional == static_cast<int>(fam_y.size()) && !y0.is_zero();

    const mlq::QKZReport rep = mlq::check_qkz(lambda, fam_y);

    bool trunc_ok = true;
    int trunc_qdeg = -1;
    if (opt.trunc > 0) {
        const mlq::TruncatedTrace tr = mlq::trace_certified(lambda, opt.trunc);
        trunc_qdeg = tr.qdeg;
        trunc_ok = tr.series == mlq::truncate_q(y0, tr.qdeg);
    }

    const bool ok = prop_ok && rep.all_pass() && trunc_ok;
    if (json_mode(opt)) {
        Json j{{"lambda", lambda},
               {"rearrangements", fam_y.size()},
               {"proportional", prop_ok},
               {"identities", mlq::json_qkz_report(rep)["identities"]},
               {"failed", rep.failed}};
        if (opt.trunc > 0)
            j["trunc"] = Json{{"d", opt.trunc}, {"qdeg", trunc_qdeg}, {"consistent", trunc_ok}};
        emit_json(opt, j);
        return ok ? 0 : 2;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("rearrangements", std::to_string(fam_y.size()));
    rows.emplace_back("trace proportional to weight polynomial",
                      prop_ok ? "yes" : "NO");
    for (const auto& [name, counts] : rep.tally())
        rows.emplace_back(name, std::to_string(counts.first) + "/" +
                                    std::to_string(counts.second) + " pass");
    if (opt.trunc > 0)
        rows.emplace_back("truncated trace at d=" + std::to_string(opt.trunc) +
                              " (q-order " + std::to_string(trunc_qdeg) + ")",
                          trunc_ok ? "consistent" : "INCONSISTENT");
    emit(opt, "type " + mlq::composition_str(lambda) + "\n" + mlq::render_table(rows) +
                  (ok ? "all checks passed\n" : "checks FAILED\n"));
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiline queues, weight polynomials, and their verifications"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", opt.out_path, "write output to a file instead of stdout");
    };
    auto wire = [&](CLI::App* sub, int (*fn)(const Options&)) {
        add_common(sub);
        sub->callback([&handler, fn] { handler = fn; });
        return sub;
    };

    CLI::App* c;
    c = wire(app.add_subcommand("enumerate", "list all queues of a given type"), cmd_enumerate);
    c->add_option("--mu", opt.mu_raw, "type, comma-separated")->required();

    c = wire(app.add_subcommand("fmu", "weight polynomial of a type"), cmd_fmu);
    c->add_option("--mu", opt.mu_raw, "type, comma-separated")->required();
    c->add_option("--q", opt.q_raw, "with --t: also evaluate at x = 1");
    c->add_option("--t", opt.t_raw, "with --q: also evaluate at x = 1");

    c = wire(app.add_subcommand("zlambda", "symmetric weight polynomial of a partition"),
             cmd_zlambda);
    c->add_option("--lambda", opt.lambda_raw, "partition, comma-separated")->required();
    c->add_option("--q", opt.q_raw, "with --t: also evaluate at x = 1");
    c->add_option("--t", opt.t_raw, "with --q: also evaluate at x = 1");

    c = wire(app.add_subcommand("nonsym",
                                "certify the monic eigenvector characterization of F"),
             cmd_nonsym);
    c->add_option("--lambda", opt.lambda_raw, "partition, comma-separated")->required();

    c = wire(app.add_subcommand("verify-qkz", "exchange and shift identities for a family"),
             cmd_verify_qkz);
    c->add_option("--lambda", opt.lambda_raw, "partition, comma-separated")->required();

    c = wire(app.add_subcommand("tableaux", "list all queue tableaux of a given type"),
             cmd_tableaux);
    c->add_option("--mu", opt.mu_raw, "type, comma-separated")->required();

    c = wire(app.add_subcommand("stationary", "exact stationary distribution of the ring chain"),
             cmd_stationary);
    c->add_option("--lambda", opt.lambda_raw, "partition, comma-separated")->required();
    c->add_option("--t", opt.t_raw, "swap-rate parameter p/q; omit for symbolic");
    c->add_option("--steps", opt.steps, "also simulate this many steps");
    c->add_option("--seed", opt.seed, "simulation seed (default 1)");

    c = wire(app.add_subcommand("martin-check",
                                "stationary weights against the queue partition function"),
             cmd_martin_check);
    c->add_option("--lambda", opt.lambda_raw, "partition, comma-separated")->required();
    c->add_option("--t", opt.t_raw, "swap-rate parameter p/q; omit for symbolic");

    c = wire(app.add_subcommand("ansatz", "trace construction against the weight polynomials"),
             cmd_ansatz);
    c->add_option("--lambda", opt.lambda_raw, "partition, comma-separated")->required();
    c->add_option("--trunc", opt.trunc, "also check the truncated trace at this dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return handler(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
