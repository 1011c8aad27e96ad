// Argument parsing for the hopfcyc executable.  Needs CLI11.hpp on the include path.
#ifndef HOPFCYC_CLI_DRIVER_HPP
#define HOPFCYC_CLI_DRIVER_HPP

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hopfcyc/cli/commands.hpp"

namespace hopfcyc {

namespace detail {

struct CliOptions
{
    std::string spec;
    std::string complex = "Ta";
    std::string homology_complex = "CMa";
    std::string theory = "hc";
    std::string group;
    std::string field = "Q";
    std::optional<std::size_t> N;
    std::optional<std::string> csv;
};

inline std::size_t resolve_N(const CliOptions& o, const SpecDocument& doc)
{
    return o.N.value_or(doc.N.value_or(3));
}

template <typename Fn>
int with_loaded(const CliOptions& o, bool enforce_axioms, Fn&& fn)
{
    const SpecDocument doc = parse_spec_file(o.spec);
    return with_field(doc.field, [&](const auto& f) { return fn(load(doc, f, enforce_axioms), resolve_N(o, doc)); });
}

}  // namespace detail

/// Runs one hopfcyc invocation; args excludes the program name.  Returns the exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact (co)cyclic complexes of Hopf module/comodule pairs", "hopfcyc"};
    app.require_subcommand(1);
    detail::CliOptions o;

    auto add_spec = [&](CLI::App* c) { c->add_option("spec", o.spec, "fixture file")->required(); };
    auto add_N = [&](CLI::App* c) { c->add_option("--N", o.N, "truncation degree (default: file, else 3)"); };

    auto* verify = app.add_subcommand("verify", "Hopf and module/comodule axioms, stability, aYD");
    add_spec(verify);

    auto* identities = app.add_subcommand("identities", "identity suite of one complex");
    add_spec(identities);
    add_N(identities);
    identities->add_option("--complex", o.complex)->check(CLI::IsMember(complex_names()));

    auto* homology = app.add_subcommand("homology", "HH or HC dimensions of CM^a");
    add_spec(homology);
    add_N(homology);
    homology->add_option("--complex", o.homology_complex)->check(CLI::IsMember({"CMa"}));
    homology->add_option("--theory", o.theory)->check(CLI::IsMember({"hh", "hc"}));
    homology->add_option("--csv", o.csv, "also write the table as csv");

    auto* duality = app.add_subcommand("duality", "beta, alpha, q and the dual of T^c");
    add_spec(duality);
    add_N(duality);

    auto* oracle = app.add_subcommand("oracle", "group homology and its HC sums");
    oracle->add_option("--group", o.group, "builtin group or Cayley-table file")->required();
    add_N(oracle);
    oracle->add_option("--field", o.field, "Q or GF<p>");
    oracle->add_option("--csv", o.csv, "also write the table as csv");

    auto* emit = app.add_subcommand("emit", "rewrite a fixture in explicit form");
    add_spec(emit);
    add_N(emit);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (verify->parsed())
            return detail::with_loaded(o, false, [&](const auto& l, std::size_t) { return run_verify(out, l.hopf, l.module); });
        if (identities->parsed())
            return detail::with_loaded(
                o, true, [&](const auto& l, std::size_t N) { return run_identities(out, l.module, o.complex, N); });
        if (homology->parsed()) {
            const Theory th = o.theory == "hh" ? Theory::hh : Theory::hc;
            return detail::with_loaded(
                o, true, [&](const auto& l, std::size_t N) { return run_homology(out, l.module, o.homology_complex, th, N, o.csv); });
        }
        if (duality->parsed())
            return detail::with_loaded(o, true, [&](const auto& l, std::size_t N) { return run_duality(out, l.module, N); });
        if (emit->parsed()) {
            const SpecDocument doc = parse_spec_file(o.spec);
            return with_field(doc.field, [&](const auto& f) {
                auto l = load(doc, f);
                out << emit_spec(l.hopf, l.module, o.N ? o.N : doc.N);
                return static_cast<int>(exit_pass);
            });
        }
        auto [g, name] = load_group(o.group);
        const std::size_t N = o.N.value_or(3);
        return with_field(parse_field_option(o.field),
                          [&](const auto& f) { return run_oracle(out, g, name, f, N, o.csv); });
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const AxiomError& e) {
        err << "axiom failure: " << e.what() << "\n";
        out << "result  FAIL  first failure: " << e.what() << "\n";
        return exit_check_failure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        out << "result  FAIL  first failure: " << e.what() << "\n";
        return exit_check_failure;
    }
}

}  // namespace hopfcyc

#endif  // HOPFCYC_CLI_DRIVER_HPP
