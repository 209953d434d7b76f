#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using qdc::cli::Options;
using qdc::cli::Report;

void print_report(const Report& r, const Options& opt, bool csv_default = false) {
    const bool csv = opt.format.empty() ? csv_default : opt.format == "csv";
    std::cout << (csv ? r.to_csv_text() : r.to_json_text());
}

int status_to_exit(const Report& r) { return r.status == "fail" ? 1 : 0; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternary digit-parity cyclic codes: construction, parameters, verification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_option("--budget", opt.budget, "codeword enumeration budget (default 2^22)");
    app.add_option("--seed", opt.seed, "seed for sampled bounds and verdicts (default 0xC0DE)");
    app.add_option("--samples", opt.samples, "random samples for bounds/verdicts (default 10^4)");
    app.add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--modulus-file", opt.modulus_file,
                   "primitive-polynomial config (lines \"m:bitmask\")");

    int arg_i = -1, arg_m = -1;
    std::string verify_target, table_spec, m_spec;
    uint64_t max_a = 0;

    const auto add_code_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("parity", arg_i, "parity selector (0 or 1)");
        sub->add_option("degree", arg_m, "extension degree m");
        sub->add_option("--i", arg_i, "parity selector (flag form)");
        sub->add_option("--m", arg_m, "extension degree (flag form)");
        sub->add_option("--descriptor", opt.descriptor_file, "code descriptor JSON file");
        return sub;
    };

    CLI::App* c_build = add_code_cmd("build", "construct a code and print its descriptor");
    CLI::App* c_params = add_code_cmd("params", "parameters [n, k] and minimum distance");
    CLI::App* c_dual = add_code_cmd("dual", "parameters of the dual code");
    CLI::App* c_extend = add_code_cmd("extend", "parameters of the extended code");
    CLI::App* c_trace = add_code_cmd("trace", "parameters of the binary trace code");
    CLI::App* c_subfield = add_code_cmd("subfield", "parameters of the binary subfield subcode");
    CLI::App* c_gray = add_code_cmd("gray", "parameters of the binary Gray image");

    CLI::App* c_verify = app.add_subcommand("verify", "run a named verification suite");
    c_verify->add_option("target", verify_target, "suite name or \"all\"")
        ->required()
        ->check(CLI::IsMember(qdc::cli::verify_targets()));
    c_verify->add_option("--m", m_spec, "m values (e.g. 2, 1..4, or 1,3,5)");
    c_verify->add_option("--max-a", max_a, "upper end of an a-sweep");
    c_verify->add_flag("--fast", opt.fast, "reduced sweep sizes");

    CLI::App* c_table = app.add_subcommand("table", "CSV summary rows for a range of m");
    c_table->add_option("ms", table_spec, "m values (e.g. 2, 1..3, or 1,3,5)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (!m_spec.empty()) opt.m_list = qdc::cli::parse_m_spec(m_spec);
        if (max_a > 0) opt.max_a = max_a;

        const bool have_code_args = !opt.descriptor_file.empty() || (arg_i >= 0 && arg_m >= 0);
        for (CLI::App* sub :
             {c_build, c_params, c_dual, c_extend, c_trace, c_subfield, c_gray}) {
            if (sub->parsed() && !have_code_args)
                throw qdc::Error("need either positional i and m or --descriptor");
        }

        Report r;
        if (c_build->parsed()) r = qdc::cli::cmd_build(arg_i, arg_m, opt);
        else if (c_params->parsed()) r = qdc::cli::cmd_params(arg_i, arg_m, opt);
        else if (c_dual->parsed()) r = qdc::cli::cmd_dual(arg_i, arg_m, opt);
        else if (c_extend->parsed()) r = qdc::cli::cmd_extend(arg_i, arg_m, opt);
        else if (c_trace->parsed()) r = qdc::cli::cmd_trace(arg_i, arg_m, opt);
        else if (c_subfield->parsed()) r = qdc::cli::cmd_subfield(arg_i, arg_m, opt);
        else if (c_gray->parsed()) r = qdc::cli::cmd_gray(arg_i, arg_m, opt);
        else if (c_verify->parsed()) r = qdc::cli::cmd_verify(verify_target, opt);
        else if (c_table->parsed()) {
            r = qdc::cli::cmd_table(qdc::cli::parse_m_spec(table_spec), opt);
            print_report(r, opt, /*csv_default=*/true);
            return status_to_exit(r);
        }
        print_report(r, opt);
        return status_to_exit(r);
    } catch (const qdc::NonIntegralResult& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const qdc::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const qdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
