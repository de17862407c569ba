#include "invphi/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "invphi/render.hpp"

namespace invphi::cli {

namespace {

struct CommonOpts {
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "also write the output bytes to PATH");
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    return Format::text;
}

ordered_json wrap_document(const std::string& command, ordered_json parameters,
                           ordered_json result, const std::string& format) {
    return {{"command", command},
            {"parameters", std::move(parameters)},
            {"result", std::move(result)},
            {"format", format}};
}

// Emits the payload; json output is wrapped in the command document.
void emit(std::ostream& out, const CommonOpts& opts, const std::string& command,
          const ordered_json& parameters, const ordered_json& json_result,
          const std::string& rendered) {
    std::string bytes;
    if (parse_format(opts.format) == Format::json)
        bytes = wrap_document(command, parameters, json_result, opts.format).dump() + "\n";
    else
        bytes = rendered;
    out << bytes;
    if (!opts.output.empty()) {
        std::ofstream f(opts.output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + opts.output);
        f << bytes;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"image of Euler's totient function and inverse-totient analysis"};
    app.require_subcommand(1);

    // option storage; actions run after a successful parse so that usage
    // errors (exit 1) are separated from domain/overflow errors (exit 2)
    std::function<void()> action;
    u64 phi_n = 0, inv_m = 0, bound_m = 0, tp_p = 0, tpk_p = 0, tpk_k = 0, pow2_k = 0,
        fact_n = 0, sset_p = 0;
    u64 sophie_limit = 10000, sset_limit = 10000, lehmer_limit = 1000000, od_limit = 10000;
    std::string inv_algorithm = "construct";
    std::vector<u64> table_rows = {1, 2, 4, 6, 8, 10, 12, 14};
    CommonOpts phi_opts, inv_opts, bound_opts, tp_opts, tpk_opts, pow2_opts, fact_opts,
        sophie_opts, sset_opts, lehmer_opts, od_opts, table_opts;

    auto* phi_cmd = app.add_subcommand("phi", "Euler's totient of N");
    phi_cmd->add_option("N", phi_n, "argument")->required();
    add_common(phi_cmd, phi_opts);
    phi_cmd->callback([&] {
        action = [&] {
            const TotientValue t{phi_n, phi(phi_n)};
            emit(out, phi_opts, "phi", {{"n", phi_n}}, to_json(t),
                 render(t, parse_format(phi_opts.format)));
        };
    });

    auto* inv_cmd = app.add_subcommand("inverse", "the preimage phi^-1(M)");
    inv_cmd->add_option("M", inv_m, "target value")->required();
    inv_cmd->add_option("--algorithm", inv_algorithm, "construct, scan, or verify both")
        ->check(CLI::IsMember({"construct", "scan", "verify"}))
        ->capture_default_str();
    add_common(inv_cmd, inv_opts);
    inv_cmd->callback([&] {
        action = [&] {
            std::vector<u64> elements;
            if (inv_algorithm == "scan") {
                elements = scan_preimage(inv_m);
            } else {
                elements = inverse_phi(inv_m);
                if (inv_algorithm == "verify" && elements != scan_preimage(inv_m))
                    throw std::runtime_error(
                        "inverse algorithms disagree for m = " + std::to_string(inv_m) +
                        ": scan " + brace_list(scan_preimage(inv_m)) + " vs construct " +
                        brace_list(elements));
            }
            const PreimageReport report = preimage_report(inv_m, std::move(elements));
            emit(out, inv_opts, "inverse", {{"m", inv_m}, {"algorithm", inv_algorithm}},
                 to_json(report), render(report, parse_format(inv_opts.format)));
        };
    });

    auto* bound_cmd = app.add_subcommand("bound", "Gupta's bound A(M) and the admissible primes");
    bound_cmd->add_option("M", bound_m, "target value (1 or even)")->required();
    add_common(bound_cmd, bound_opts);
    bound_cmd->callback([&] {
        action = [&] {
            const GuptaBound b = gupta_bound(bound_m);
            emit(out, bound_opts, "bound", {{"m", bound_m}}, to_json(b),
                 render(b, parse_format(bound_opts.format)));
        };
    });

    auto* classify = app.add_subcommand("classify", "membership of a structured family");
    classify->require_subcommand(1);

    auto* two_p = classify->add_subcommand("two-p", "is 2P in the image?");
    two_p->add_option("P", tp_p, "prime")->required();
    add_common(two_p, tp_opts);
    two_p->callback([&] {
        action = [&] {
            const FamilyVerdict v = classify_2p(tp_p);
            emit(out, tp_opts, "classify two-p", {{"p", tp_p}}, to_json(v),
                 render(v, parse_format(tp_opts.format)));
        };
    });

    auto* two_pk = classify->add_subcommand("two-p-k", "is 2*P^K in the image?");
    two_pk->add_option("P", tpk_p, "odd prime, not 3")->required();
    two_pk->add_option("K", tpk_k, "exponent, >= 1")->required();
    add_common(two_pk, tpk_opts);
    two_pk->callback([&] {
        action = [&] {
            const FamilyVerdict v = classify_2pk(tpk_p, tpk_k);
            emit(out, tpk_opts, "classify two-p-k", {{"p", tpk_p}, {"k", tpk_k}}, to_json(v),
                 render(v, parse_format(tpk_opts.format)));
        };
    });

    auto* pow2 = classify->add_subcommand("pow2", "odd preimage of 2^K and A(2^K)");
    pow2->add_option("K", pow2_k, "exponent, >= 1")->required();
    add_common(pow2, pow2_opts);
    pow2->callback([&] {
        action = [&] {
            const Pow2Preimage p = pow2_preimage(pow2_k);
            emit(out, pow2_opts, "classify pow2", {{"k", pow2_k}}, to_json(p),
                 render(p, parse_format(pow2_opts.format)));
        };
    });

    auto* factorial = classify->add_subcommand("factorial", "witness with phi(witness) = N!");
    factorial->add_option("N", fact_n, "argument, N! must fit 64 bits")->required();
    add_common(factorial, fact_opts);
    factorial->callback([&] {
        action = [&] {
            const FactorialVerdict v = factorial_witness(fact_n);
            emit(out, fact_opts, "classify factorial", {{"n", fact_n}}, to_json(v),
                 render(v, parse_format(fact_opts.format)));
        };
    });

    auto* scan = app.add_subcommand("scan", "bounded enumerations");
    scan->require_subcommand(1);

    auto* sophie = scan->add_subcommand("sophie", "Sophie Germain / safe prime scan");
    sophie->add_option("--limit", sophie_limit, "scan primes p <= limit")->capture_default_str();
    add_common(sophie, sophie_opts);
    sophie->callback([&] {
        action = [&] {
            const SophieScan s = sophie_scan(sophie_limit);
            emit(out, sophie_opts, "scan sophie", {{"limit", sophie_limit}}, to_json(s),
                 render(s, sophie_limit, parse_format(sophie_opts.format)));
        };
    });

    auto* sset = scan->add_subcommand("s-set", "the nonimage family S(P)");
    sset->add_option("P", sset_p, "odd prime")->required();
    sset->add_option("--limit", sset_limit, "members q <= limit")->capture_default_str();
    add_common(sset, sset_opts);
    sset->callback([&] {
        action = [&] {
            const NonimageFamily fam = s_set(sset_p, sset_limit);
            emit(out, sset_opts, "scan s-set", {{"p", sset_p}, {"limit", sset_limit}},
                 to_json(fam), render(fam, sset_limit, parse_format(sset_opts.format)));
        };
    });

    auto* lehmer = scan->add_subcommand("lehmer", "composite n with phi(n) | n-1");
    lehmer->add_option("--limit", lehmer_limit, "search n <= limit")->capture_default_str();
    add_common(lehmer, lehmer_opts);
    lehmer->callback([&] {
        action = [&] {
            const std::vector<u64> sols = lehmer_search(lehmer_limit);
            emit(out, lehmer_opts, "scan lehmer", {{"limit", lehmer_limit}}, ordered_json(sols),
                 render_lehmer(sols, lehmer_limit, parse_format(lehmer_opts.format)));
        };
    });

    auto* odd_doubles = scan->add_subcommand("odd-doubles", "odd s with 2s in the image");
    odd_doubles->add_option("--limit", od_limit, "use primes p <= limit")->capture_default_str();
    add_common(odd_doubles, od_opts);
    odd_doubles->callback([&] {
        action = [&] {
            const std::vector<u64> values = odd_doubles_in_image(od_limit);
            emit(out, od_opts, "scan odd-doubles", {{"limit", od_limit}}, ordered_json(values),
                 render_odd_doubles(values, od_limit, parse_format(od_opts.format)));
        };
    });

    auto* table = app.add_subcommand("table", "the (m, A(m), phi(A(m))) table");
    table->add_option("--rows", table_rows, "comma-separated m values (1 or even)")
        ->delimiter(',');
    add_common(table, table_opts);
    table->callback([&] {
        action = [&] {
            std::vector<TableRow> rows;
            ordered_json result = ordered_json::array();
            for (u64 m : table_rows) rows.push_back(table_row(m));
            for (const auto& row : rows) result.push_back(to_json(row));
            emit(out, table_opts, "table", {{"rows", table_rows}}, result,
                 render_table(rows, parse_format(table_opts.format)));
        };
    });

    std::vector<const char*> argv;
    argv.push_back("invphi");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;  // any true usage error is exit 1
    }

    try {
        action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace invphi::cli
