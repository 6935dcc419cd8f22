#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "greenbn/report.hpp"
#include "greenbn/verify.hpp"

namespace {

using namespace greenbn;

struct Options {
    int n = 0;
    std::string m = "1";
    std::string format = "text";
    uint64_t seed = 0;
    bool twist = false;
    std::string cache_dir;
    int max_n = 6;
    std::string a_parts, b_part, unipotent_label;
};

int emit(const std::string& text, const std::string& json, const std::string& format) {
    std::cout << (format == "json" ? json : text);
    if (format != "json") return 0;
    std::cout << "\n";
    return 0;
}

int cmd_residual(const Options& o) {
    auto r = build_residual_report(o.n, MParam::parse(o.m));
    return emit(render_text(r), emit_json(r), o.format);
}

int cmd_symbols(const Options& o) {
    auto r = build_symbols_report(o.n, MParam::parse(o.m));
    return emit(render_text(r), emit_json(r), o.format);
}

int cmd_unipotent(const Options& o) {
    auto r = build_unipotent_report(o.n, MParam::parse(o.m));
    return emit(render_text(r), emit_json(r), o.format);
}

int cmd_springer(const Options& o) {
    MParam m = MParam::parse(o.m);
    SpringerReport r;
    if (!o.unipotent_label.empty()) {
        // Single-label query.
        UnipotentLabel label{parse_partition(o.unipotent_label)};
        int n = o.n;
        if (n == 0) {
            // Deduce the rank from the label weight.
            long long w = label.parts.weight();
            int tam = m.abs().twice_m;
            long long msq = m.is_integer() ? (1LL * tam * tam) / 4 : (1LL * tam * tam - 1) / 4;
            if ((w - msq) % 2 != 0) throw std::invalid_argument("label weight does not match m");
            n = static_cast<int>((w - msq) / 2);
        }
        SpringerRow row;
        row.type = f_bc(label, n, m);
        row.sigma = phi(label, n, m);
        row.label = label;
        row.roundtrip_ok = psi(row.sigma.front(), m) == label;
        r.n = n;
        r.m = m;
        r.rows.push_back(std::move(row));
    } else if (!o.b_part.empty() || !o.a_parts.empty()) {
        SubspaceType type{parse_partition(o.a_parts), parse_partition(o.b_part)};
        if (!is_residual(type.b_part, m))
            throw std::invalid_argument("--b-part: " + type.b_part.str() +
                                        " is not residual at m=" + m.str());
        int n = type.rank();
        SpringerRow row;
        row.type = type;
        row.sigma = sigma_subspace(type, m);
        row.label = psi(row.sigma.front(), m);
        SubspaceType back = f_bc(row.label, n, m);
        row.roundtrip_ok = center_coordinates(back, m) == center_coordinates(type, m) &&
                           back.a_parts == type.a_parts;
        r.n = n;
        r.m = m;
        r.rows.push_back(std::move(row));
    } else {
        r = build_springer_report(o.n, m);
    }
    int rc = emit(render_text(r), emit_json(r), o.format);
    for (const auto& row : r.rows)
        if (!row.roundtrip_ok) {
            std::cerr << "greenbn: invariant violated: f_bc(psi(sigma)) != orbit for "
                      << row.type.str() << "\n";
            return 3;
        }
    return rc;
}

int cmd_green(const Options& o) {
    MParam m = MParam::parse(o.m);
    auto [table, w] = table_and_omega(o.n, o.cache_dir);
    GreenSolution sol = solve_green(table, w, m, o.seed);
    SolutionReport rep = verify_solution(sol);
    if (!rep.ok()) {
        std::cerr << "greenbn: invariant violated: "
                  << (!rep.exact               ? "P Lambda P^T != Omega"
                      : !rep.polynomial_entries ? "non-polynomial P entry"
                      : !rep.integer_coefficients ? "non-integer P coefficient"
                      : !rep.degree_bounds      ? "degree bound a(column) exceeded"
                                                : "support/diagonal condition")
                  << "\n";
        return 3;
    }
    GreenReport r = build_green_report(sol, m, o.seed, o.twist);
    return emit(render_text(r), emit_json(r), o.format);
}

int cmd_verify(const Options& o) {
    bool ok = true;
    for (const auto& res : run_verification(o.max_n)) {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << " (" << res.detail << ")\n";
        ok = ok && res.pass;
    }
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of residual points, generalized Springer maps and "
                 "Green functions for the type-B hyperoctahedral series"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* cmd, bool needs_n) {
        auto* n = cmd->add_option("--n", o.n, "rank")->check(CLI::NonNegativeNumber);
        if (needs_n) n->required();
        cmd->add_option("--m", o.m, "parameter ratio, a half-integer such as 2 or -7/2");
        cmd->add_option("--format", o.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", o.seed, "refinement seed for the basis order");
        cmd->add_option("--cache-dir", o.cache_dir, "directory for the character-table cache");
    };

    auto* residual = app.add_subcommand("residual", "residual subspace orbits and centers");
    add_common(residual, true);
    auto* symbols = app.add_subcommand("symbols", "a-values, symbols and similarity classes");
    add_common(symbols, true);
    auto* springer = app.add_subcommand("springer", "Springer correspondents per orbit");
    add_common(springer, false);
    springer->add_option("--a-parts", o.a_parts, "A-side parts of one subspace, e.g. [3,7,9]");
    springer->add_option("--b-part", o.b_part, "B-side residual partition, e.g. [6,6,1,1,1,1]");
    springer->add_option("--unipotent", o.unipotent_label, "single label query, e.g. [14,13,13]");
    auto* unipotent = app.add_subcommand("unipotent", "unipotent labels, phi classes and types");
    add_common(unipotent, true);
    auto* green = app.add_subcommand("green", "solve the Green-function matrix equation");
    add_common(green, true);
    green->add_flag("--twist", o.twist, "relabel table rows by the sign character");
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--max-n", o.max_n, "rank bound for the suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (residual->parsed()) return cmd_residual(o);
        if (symbols->parsed()) return cmd_symbols(o);
        if (springer->parsed()) return cmd_springer(o);
        if (unipotent->parsed()) return cmd_unipotent(o);
        if (green->parsed()) return cmd_green(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "greenbn: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "greenbn: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
