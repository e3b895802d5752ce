#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpde/generators.hpp"
#include "qpde/io.hpp"

using namespace qpde;

namespace {

Rat parse_rat(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw BadInput("not a rational (use a/b): '" + s + "'");
    }
}

std::complex<double> parse_complex(const std::string& s) {
    try {
        const auto comma = s.find(',');
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw BadInput("not a complex number (use re,im): '" + s + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw BadInput("cannot open output file: " + out_path);
    f << text;
}

// Named series reachable from `expand`.  The spec list below doubles as the
// catalog printed by `list`.
const std::vector<std::pair<std::string, GeneratorKind>>& generator_catalog() {
    static const std::vector<std::pair<std::string, GeneratorKind>> cat = {
        {"eta", GeneratorKind::Eta},
        {"theta", GeneratorKind::Theta},
        {"theta0", GeneratorKind::Theta0},
        {"theta1", GeneratorKind::Theta1},
        {"a0", GeneratorKind::A0},
        {"a1", GeneratorKind::A1},
        {"mu", GeneratorKind::Mu},
        {"rank", GeneratorKind::RankEulerian},
        {"rank-lerch", GeneratorKind::RankLerch},
        {"crank", GeneratorKind::Crank},
        {"rstar", GeneratorKind::RStar},
        {"cstar", GeneratorKind::CStar},
        {"mock-f", GeneratorKind::MockF},
        {"rodd", GeneratorKind::ROdd},
        {"nde-over", GeneratorKind::NDE},
        {"nde-m2over", GeneratorKind::NDE},
        {"nde-m2odd", GeneratorKind::NDE},
        {"s1", GeneratorKind::S1},
        {"s2", GeneratorKind::S2},
        {"s3", GeneratorKind::S3},
    };
    return cat;
}

QSeries expand_series(const std::string& name, const Rat& order, const Rat& c, const Rat& k,
                      const Rat& alpha, const Rat& beta) {
    if (name == "partitions") return partition_series(order, k);
    for (const auto& [nm, kind] : generator_catalog()) {
        if (nm != name) continue;
        GeneratorSpec g;
        g.kind = kind;
        g.c = c;
        g.k = k;
        g.alpha = alpha;
        g.beta = beta;
        g.order = order;
        if (name == "nde-m2over") g.nde = NdeVariant::M2Over;
        if (name == "nde-m2odd") g.nde = NdeVariant::M2NoRepeatOdd;
        return build(g);
    }
    throw BadInput("no series named '" + name + "' (see `qpde list`)");
}

int run_expand(const std::string& name, const std::string& order, const std::string& c,
               const std::string& k, const std::string& alpha, const std::string& beta,
               const std::string& format, const std::string& out) {
    const QSeries s =
        expand_series(name, parse_rat(order), parse_rat(c), parse_rat(k), parse_rat(alpha),
                      parse_rat(beta));
    emit(format == "json" ? to_json(s).dump() + "\n" : render_text(s), out);
    return 0;
}

int run_verify(const std::string& name, const std::string& order, const std::string& alpha,
               const std::string& beta, const std::string& format, const std::string& out) {
    std::optional<IdentityParams> params;
    if (!alpha.empty() || !beta.empty())
        params = IdentityParams{alpha.empty() ? Rat(0) : parse_rat(alpha),
                                beta.empty() ? Rat(0) : parse_rat(beta)};

    Rat ord;
    if (!order.empty()) {
        ord = parse_rat(order);
    } else {
        ord = Rat(20);
        for (const auto& e : list_identities())
            if (e.name == name) ord = e.default_order;
    }

    const IdentityReport rep = verify(name, ord, params);
    emit(format == "json" ? to_json(rep).dump() + "\n" : render_text(rep) + "\n", out);
    return rep.pass ? 0 : 1;
}

int run_verify_all(const std::string& order, const std::string& format, const std::string& out) {
    const auto reports = verify_all(parse_rat(order));
    bool all_pass = true;
    double total = 0;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        total += r.seconds;
    }
    if (format == "json") {
        emit(to_json(reports).dump() + "\n", out);
    } else {
        std::string text;
        double running = 0;
        for (const auto& r : reports) {
            running += r.seconds;
            std::ostringstream os;
            os << render_text(r) << "  [cumulative " << running << "s]\n";
            text += os.str();
        }
        std::ostringstream os;
        os << (all_pass ? "all pass" : "FAILURES above") << "  total " << total << "s\n";
        text += os.str();
        emit(text, out);
    }
    return all_pass ? 0 : 1;
}

int run_moments(unsigned k, long long n_max, bool odd, const std::string& out) {
    const MomentTable t =
        odd ? moment_table_odd(k, n_max) : moment_table(k, n_max, MomentSource::RankSeries);
    emit(to_csv(t), out);
    return 0;
}

int run_scan(long long p, long long j, unsigned k, long long a_max, long long n_max,
             const std::string& format, const std::string& out) {
    const auto cands = k == 0 ? scan_partitions(p, j, a_max, n_max) : scan(p, j, k, a_max, n_max);
    if (format == "json") {
        emit(to_json_lines(cands), out);
    } else {
        std::string text;
        for (const auto& c : cands) text += render_text(c) + "\n";
        if (cands.empty()) text = "no candidates\n";
        emit(text, out);
    }
    return 0;
}

int run_numeric_check(const std::string& name, double alpha, double beta, double tol,
                      double threshold, const std::string& u, const std::string& v,
                      const std::string& tau, const std::string& format, const std::string& out) {
    std::vector<ComplexPoint> points;
    if (!u.empty() || !v.empty() || !tau.empty()) {
        ComplexPoint pt;
        pt.u = u.empty() ? std::complex<double>{0.13, 0.07} : parse_complex(u);
        pt.v = v.empty() ? std::complex<double>{0.31, 0.11} : parse_complex(v);
        pt.tau = tau.empty() ? std::complex<double>{0, 1.1} : parse_complex(tau);
        pt.tol = tol;
        points.push_back(pt);
    } else {
        points = {{{0.13, 0.07}, {0.31, 0.11}, {0.0, 1.1}, tol},
                  {{-0.21, 0.05}, {0.17, -0.03}, {0.3, 1.3}, tol},
                  {{0.08, -0.04}, {-0.26, 0.09}, {-0.2, 0.9}, tol}};
    }

    const auto residuals = numeric_check(name, alpha, beta, points);
    bool all_pass = true;
    for (const auto& r : residuals) all_pass = all_pass && r.abs_err <= threshold;

    if (format == "json") {
        emit(to_json(residuals).dump() + "\n", out);
    } else {
        std::string text;
        for (const auto& r : residuals) text += render_text(r, threshold) + "\n";
        emit(text, out);
    }
    return all_pass ? 0 : 1;
}

int run_list(const std::string& format, const std::string& out) {
    if (format == "json") {
        Json j;
        Json ids = Json::array();
        for (const auto& e : list_identities())
            ids.push_back(Json{{"name", e.name},
                               {"defaultOrder", format_rat(e.default_order)},
                               {"needsParams", e.needs_params},
                               {"statement", e.statement}});
        Json gens = Json::array();
        for (const auto& [nm, kind] : generator_catalog()) gens.push_back(nm);
        gens.push_back("partitions");
        j["identities"] = ids;
        j["generators"] = gens;
        emit(j.dump() + "\n", out);
        return 0;
    }
    std::string text = "identities (name, default order, statement):\n";
    for (const auto& e : list_identities()) {
        text += "  " + e.name + "  [" + format_rat(e.default_order) + "]";
        if (e.needs_params) text += "  (needs --alpha/--beta)";
        text += "\n      " + e.statement + "\n";
    }
    text += "series for `expand`:\n ";
    for (const auto& [nm, kind] : generator_catalog()) text += " " + nm;
    text += " partitions\n";
    text += "numeric checks: mainequation theta-lemma wronskian prop21 prop22\n";
    emit(text, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series identities, rank moments, and congruence scans"};
    app.require_subcommand(1);

    std::string order, alpha, beta, c = "1", kq = "1", format = "text", out, name;
    std::string u, v, tau;
    unsigned k = 2;
    long long p = 5, j = 1, a_max = 50, n_max = -1;
    bool odd = false;
    double dalpha = 0.5, dbeta = 0.0, tol = 1e-9, threshold = 1e-6;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        if (with_format)
            sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out, "write output to a file instead of stdout");
    };

    auto* cmd_expand = app.add_subcommand("expand", "print q-expansion of a named series");
    cmd_expand->add_option("name", name, "series name (see `qpde list`)")->required();
    cmd_expand->add_option("--order", order, "truncation order, rational a/b")->capture_default_str();
    cmd_expand->add_option("--alpha", alpha, "characteristic alpha, rational");
    cmd_expand->add_option("--beta", beta, "characteristic beta, rational");
    cmd_expand->add_option("--c", c, "z-multiplier");
    cmd_expand->add_option("--k", kq, "modulus scale (tau -> k tau)");
    add_common(cmd_expand);

    auto* cmd_verify = app.add_subcommand("verify", "verify one identity to a q-order");
    cmd_verify->add_option("name", name, "identity name")->required();
    cmd_verify->add_option("--order", order, "q-order (default: the identity's registered order)");
    cmd_verify->add_option("--alpha", alpha, "alpha, rational a/b");
    cmd_verify->add_option("--beta", beta, "beta, rational a/b");
    add_common(cmd_verify);

    auto* cmd_all = app.add_subcommand("verify-all", "run the whole identity registry");
    cmd_all->add_option("--order", order, "q-order for every entry");
    add_common(cmd_all);

    auto* cmd_moments = app.add_subcommand("moments", "rank moment table as CSV");
    cmd_moments->add_option("--k", k, "moment order")->capture_default_str();
    cmd_moments->add_option("--n-max", n_max, "largest n");
    cmd_moments->add_flag("--odd", odd, "odd-rank deviation moments");
    add_common(cmd_moments, false);

    auto* cmd_scan = app.add_subcommand("scan", "search arithmetic progressions mod p^j");
    cmd_scan->add_option("--p", p, "prime modulus base")->capture_default_str();
    cmd_scan->add_option("--j", j, "prime power")->capture_default_str();
    cmd_scan->add_option("--k", k, "moment order (0 = plain partition numbers)")
        ->capture_default_str();
    cmd_scan->add_option("--a-max", a_max, "largest progression step A")->capture_default_str();
    cmd_scan->add_option("--n-max", n_max, "verification depth per progression");
    add_common(cmd_scan);

    auto* cmd_num = app.add_subcommand("numeric-check", "pointwise complex check of an identity");
    cmd_num->add_option("name", name, "mainequation|theta-lemma|wronskian|prop21|prop22")
        ->required();
    cmd_num->add_option("--alpha", dalpha, "alpha, decimal")->capture_default_str();
    cmd_num->add_option("--beta", dbeta, "beta, decimal")->capture_default_str();
    cmd_num->add_option("--tol", tol, "evaluator tolerance")->capture_default_str();
    cmd_num->add_option("--threshold", threshold, "pass/fail residual bound")
        ->capture_default_str();
    cmd_num->add_option("--u", u, "custom point u as re,im");
    cmd_num->add_option("--v", v, "custom point v as re,im");
    cmd_num->add_option("--tau", tau, "custom point tau as re,im");
    add_common(cmd_num);

    auto* cmd_list = app.add_subcommand("list", "catalog of identities and series");
    add_common(cmd_list);

    try {
        app.parse(argc, argv);

        if (cmd_expand->parsed())
            return run_expand(name, order.empty() ? "20" : order, c, kq,
                              alpha.empty() ? "0" : alpha, beta.empty() ? "0" : beta, format, out);
        if (cmd_verify->parsed()) return run_verify(name, order, alpha, beta, format, out);
        if (cmd_all->parsed()) return run_verify_all(order.empty() ? "20" : order, format, out);
        if (cmd_moments->parsed()) return run_moments(k, n_max < 0 ? 40 : n_max, odd, out);
        if (cmd_scan->parsed())
            return run_scan(p, j, k, a_max, n_max < 0 ? 200 : n_max, format, out);
        if (cmd_num->parsed())
            return run_numeric_check(name, dalpha, dbeta, tol, threshold, u, v, tau, format, out);
        if (cmd_list->parsed()) return run_list(format, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UnknownIdentity& e) {
        std::cerr << "error: unknown identity: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
