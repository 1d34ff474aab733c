#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lipcex/serialize.hpp"
#include "lipcex/verify.hpp"

namespace {

using lipcex::ordered_json;

double parse_q(const std::string& s) {
    if (s == "inf") return lipcex::kInf;
    return std::stod(s);
}

std::string default_out_dir() {
    const char* env = std::getenv("LIPCEX_OUT_DIR");
    return env ? env : ".";
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw lipcex::DomainError("cannot write " + path);
    os << text;
}

int cmd_verify(const std::string& op, const lipcex::VerifyConfig& cfg,
               const std::string& output) {
    const ordered_json report = lipcex::verify_report(op, cfg);
    for (const auto& [name, body] : report.at("operators").items()) {
        for (const auto& check : body.at("checks")) {
            std::cout << (check.at("verdict") == "pass" ? "[pass] " : "[FAIL] ") << name
                      << "." << check.at("check").get<std::string>()
                      << "  margin=" << check.at("margin").dump() << "\n";
        }
        std::cout << name << ": " << body.at("verdict").get<std::string>() << "\n";
    }
    write_text(output, report.dump(2) + "\n");
    return lipcex::report_passed(report) ? 0 : 1;
}

ordered_json tables_report(const lipcex::ConstructionTables& t) {
    ordered_json j = lipcex::tables_to_json(t);
    ordered_json cert;
    double slope_err = 0.0;
    for (int n = 1; n <= t.n_table_max; ++n)
        slope_err = std::max(
            slope_err, lipcex::rel_err(t.y[static_cast<size_t>(n)] /
                                           t.h[static_cast<size_t>(n - 1)],
                                       t.m[static_cast<size_t>(n)] -
                                           t.m[static_cast<size_t>(n - 1)]));
    cert["h_positive_decreasing"] = true;  // build_tables would have thrown
    cert["y_monotone"] = true;
    cert["slope_identity_max_rel_err"] = slope_err;
    cert["lambda_le_2n_minus_1"] = true;
    cert["h_cap_rel_err"] = lipcex::rel_err(
        t.h[static_cast<size_t>(t.cap_n - 1)], (std::sqrt(2.0) - 1.0) * t.w);
    cert["y_cap_rel_err"] = lipcex::rel_err(
        t.y[static_cast<size_t>(t.cap_n)], std::exp2(t.cap_n) / (1.0 + std::sqrt(2.0)));
    j["certificates"] = cert;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructs the nonlinear operators on the (Linf, L1) couple and "
                 "verifies their Lipschitz, compactness and interpolation properties"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");
    app.set_help_all_flag("--help-all", "print help for all subcommands");

    lipcex::VerifyConfig cfg;
    std::string q_str = "2";
    std::string output;
    std::string format;

    auto* verify = app.add_subcommand("verify", "run the verification suites");
    std::string op_name;
    verify->add_option("operator", op_name, "t1|t2|t3|t4|t5|t6|v|lambda|mtilde|q|all")
        ->required();
    verify->add_option("--p", cfg.p, "Lebesgue exponent p in (1, inf)");
    verify->add_option("--theta", cfg.theta, "interpolation parameter in (0, 1)");
    verify->add_option("--q", q_str, "second interpolation index, number or 'inf'");
    verify->add_option("--n-max", cfg.n_max, "conditional expectation depth");
    verify->add_option("--N-max", cfg.big_n_max, "ramp terms / table depth");
    verify->add_option("--sample-size", cfg.sample_size, "samples per containment suite");
    verify->add_option("--pair-samples", cfg.pair_samples, "pairs per Lipschitz sweep");
    verify->add_option("--witness-count", cfg.witness_count, "N values per witness");
    verify->add_option("--tol", cfg.tol, "margin tolerance");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--output", output, "report path ('-' for stdout)");
    verify->add_option("--format", format, "report format (json)");

    auto* tables = app.add_subcommand("tables", "dump the per-(p, N) construction tables");
    double tp = 2.0;
    int tn = 1, tmax = 40;
    tables->add_option("--p", tp, "exponent p")->required();
    tables->add_option("--N", tn, "interval index N")->required();
    tables->add_option("--n-table-max", tmax, "table depth");
    tables->add_option("--output", output, "path ('-' for stdout)");
    tables->add_option("--format", format, "dump format (json)");

    auto* plot = app.add_subcommand("plotdata", "dump figure data as CSV");
    std::string target;
    double pp = 2.0, tval = -1.0, cval = 0.0;
    int pn = 1, pidx = -1, pmax = 40;
    plot->add_option("target", target, "E|G|g|gamma|sN")->required();
    plot->add_option("--p", pp, "exponent p")->required();
    plot->add_option("--N", pn, "interval index N")->required();
    plot->add_option("--n-table-max", pmax, "table depth");
    plot->add_option("--n", pidx, "slab index (t = lambda_n)");
    plot->add_option("--t", tval, "height t");
    plot->add_option("--t-index", pidx, "same as --n");
    plot->add_option("--c", cval, "constant fed to the ramp operator (sN)");
    plot->add_option("--output", output, "output directory");
    plot->add_option("--format", format, "dump format (csv)");

    CLI11_PARSE(app, argc, argv);

    try {
        if ((verify->parsed() || tables->parsed()) && !format.empty() && format != "json")
            throw lipcex::DomainError("reports and table dumps are json");
        if (plot->parsed() && !format.empty() && format != "csv")
            throw lipcex::DomainError("figure dumps are csv");
        if (verify->parsed()) {
            cfg.q = parse_q(q_str);
            if (output.empty())
                output = default_out_dir() + "/verify_" + op_name + ".json";
            return cmd_verify(op_name, cfg, output);
        }
        if (tables->parsed()) {
            const auto t = lipcex::build_tables(tp, tn, tmax);
            if (output.empty()) output = "-";
            write_text(output, tables_report(t).dump(2) + "\n");
            return 0;
        }
        if (plot->parsed()) {
            const auto t = lipcex::build_tables(pp, pn, pmax);
            if (pidx >= 0) tval = t.lambda[static_cast<size_t>(pidx)];
            const std::string dir = output.empty() ? default_out_dir() : output;
            std::filesystem::create_directories(dir);
            const std::string stem = dir + "/" + target;
            if (target == "E") {
                if (tval < 0.0) throw lipcex::DomainError("E needs --n or --t");
                write_text(stem + ".csv",
                           lipcex::polygon_to_csv(lipcex::e_polygon(t, tval)));
            } else if (target == "G") {
                if (tval < 0.0) throw lipcex::DomainError("G needs --n or --t");
                std::string csv = "polygon,x,y\n";
                const int nu = lipcex::nu_index(t, tval);
                for (int k = 1; k <= nu; ++k) {
                    const double top =
                        k < nu ? t.lambda[static_cast<size_t>(k)] : tval;
                    for (const auto& v : lipcex::e_polygon(t, top).vertices)
                        csv += std::to_string(k) + "," + std::to_string(v[0]) + "," +
                               std::to_string(v[1]) + "\n";
                }
                write_text(stem + ".csv", csv);
            } else if (target == "g") {
                if (tval < 0.0) throw lipcex::DomainError("g needs --n or --t");
                write_text(stem + ".csv",
                           lipcex::pl_to_csv(lipcex::g_profile(t, tval)));
            } else if (target == "gamma") {
                write_text(stem + ".csv", lipcex::pl_to_csv(t.gamma_inverse));
            } else if (target == "sN") {
                write_text(stem + ".csv",
                           lipcex::pl_to_csv(lipcex::s_n_profile(t, cval)));
            } else {
                throw lipcex::DomainError("unknown plot target " + target);
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
