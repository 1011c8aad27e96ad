/**
 * The subcommands behind the hopfcyc driver.  Each writes a plain-text
 * report ("key  value" lines, one check per line) and returns the exit code:
 * 0 when every check passes, 1 on a failed check.  Usage errors are thrown
 * as UsageError and mapped to 2 by the driver.
 *
 * Reports are deterministic apart from the single "time" line.
 */
#ifndef HOPFCYC_CLI_COMMANDS_HPP
#define HOPFCYC_CLI_COMMANDS_HPP

#include <chrono>
#include <filesystem>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfcyc/cli/spec_file.hpp"
#include "hopfcyc/complexes.hpp"
#include "hopfcyc/homology.hpp"

namespace hopfcyc {

enum ExitCode : int { exit_pass = 0, exit_check_failure = 1, exit_usage = 2 };

class UsageError : public Error
{
public:
    using Error::Error;
};

inline const std::vector<std::string>& complex_names()
{
    static const std::vector<std::string> names{"Ta", "CMa", "PCMa", "BCa", "Tc", "dual-Tc", "bar"};
    return names;
}

/// Calls fn with the field object described by spec.
template <typename Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn)
{
    if (spec.kind == FieldSpec::Kind::rationals)
        return fn(Rationals{});
    return fn(PrimeField(spec.characteristic));
}

inline FieldSpec parse_field_option(const std::string& s)
{
    if (s == "Q")
        return FieldSpec::rationals();
    if (s.rfind("GF", 0) == 0) {
        std::string p = s.substr(2);
        if (!p.empty() && (p.front() == '(' || p.front() == ':'))
            p = p.substr(1);
        if (!p.empty() && p.back() == ')')
            p.pop_back();
        try {
            return FieldSpec::prime(static_cast<std::uint32_t>(detail::parse_count(p, 0, "characteristic")));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("field must be Q or GF<p>, got '" + s + "'");
}

namespace detail {

class Timer
{
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

template <Field K>
void print_fixture(std::ostream& out, const std::string& command, const ModComod<K>& x, std::size_t N)
{
    out << "hopfcyc " << command << "\n";
    out << "fixture  H=" << x.hopf.name << "  X=" << x.name << "  field=" << x.field().spec().name() << "  N=" << N
        << "\n";
}

/// One line per check under a section header; returns the number of failures.
inline std::size_t print_checks(std::ostream& out, const std::string& section, const CheckReport& r)
{
    out << "[" << section << "]\n";
    for (const auto& e : r.entries()) {
        out << (e.passed ? "PASS  " : "FAIL  ") << e.name;
        if (!e.passed && !e.witness.empty())
            out << "  | " << e.witness;
        out << "\n";
    }
    return r.failures();
}

inline void print_info(std::ostream& out, const std::string& what, const std::string& value)
{
    out << "info  " << what << ": " << value << "\n";
}

inline int finish(std::ostream& out, std::size_t checks, std::size_t failures, const Timer& t,
                  const std::string& first_failure = {})
{
    out << "summary  checks=" << checks << " failures=" << failures << "\n";
    out << "time  " << std::fixed << std::setprecision(3) << t.seconds() << "s\n";
    out.unsetf(std::ios::floatfield);
    if (failures) {
        out << "result  FAIL";
        if (!first_failure.empty())
            out << "  first failure: " << first_failure;
        out << "\n";
        return exit_check_failure;
    }
    out << "result  PASS\n";
    return exit_pass;
}

struct Tally
{
    std::size_t checks = 0, failures = 0;
    std::string first;

    void add(std::ostream& out, const std::string& section, const CheckReport& r)
    {
        checks += r.size();
        failures += print_checks(out, section, r);
        if (first.empty())
            if (auto e = r.first_failure())
                first = section + ": " + e->name;
    }
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <Field K>
void print_cyclic_order(std::ostream& out, const ParaCyclicRealization<K>& r, const std::string& why)
{
    auto ids = check_identities(r, StructureKind::para_cyclic);
    std::string holds, fails;
    for (std::size_t n = 0; n < ids.cyclic_order.size(); ++n) {
        std::string& dst = ids.cyclic_order[n] ? holds : fails;
        dst += (dst.empty() ? "" : ",") + std::to_string(n);
    }
    print_info(out, "cyclic order t^(n+1) = id holds at n", holds.empty() ? "none" : holds);
    if (!fails.empty())
        print_info(out, "cyclic order fails at n", fails + " (" + why + ")");
}

inline void write_csv(const std::string& path, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::size_t>>& columns)
{
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write csv file '" + path + "'");
    for (std::size_t i = 0; i < header.size(); ++i)
        f << (i ? "," : "") << header[i];
    f << "\n";
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        f << r;
        for (const auto& c : columns)
            f << "," << c[r];
        f << "\n";
    }
}

}  // namespace detail

/// Axioms, stability and the aYD condition.  Stability and aYD are properties, not checks.
template <Field K>
int run_verify(std::ostream& out, const HopfAlgebra<K>& h, const ModComod<K>& x)
{
    detail::Timer t;
    out << "hopfcyc verify\n";
    out << "fixture  H=" << h.name << "  X=" << x.name << "  field=" << h.field.spec().name() << "\n";
    detail::Tally tally;
    tally.add(out, "Hopf axioms", check_hopf_axioms(h));
    tally.add(out, "module/comodule axioms", check_module_comodule(x));
    if (tally.failures == 0) {
        detail::print_info(out, "0-stable", detail::yes_no(check_stability(x, 0)));
        detail::print_info(out, "1-stable", detail::yes_no(check_stability(x, 1)));
        detail::print_info(out, "aYD", detail::yes_no(check_ayd(x)));
        detail::print_info(out, "stable aYD", detail::yes_no(is_stable_ayd(x)));
    }
    return detail::finish(out, tally.checks, tally.failures, t, tally.first);
}

template <Field K>
int run_identities(std::ostream& out, const ModComod<K>& x, const std::string& complex, std::size_t N)
{
    detail::Timer t;
    detail::print_fixture(out, "identities --complex " + complex, x, N);
    detail::Tally tally;
    const bool sayd = is_stable_ayd(x);
    if (complex == "Ta") {
        auto ta = build_Ta(x, N);
        detail::print_info(out, "structure", "para-cyclic");
        tally.add(out, ta.name, ta.report);
        detail::print_cyclic_order(out, ta, "expected: T^a is para-cyclic");
    } else if (complex == "CMa") {
        auto cm = build_CMa(x, N);
        detail::print_info(out, "structure", sayd ? "cyclic (X stable aYD)" : "para-cyclic (X not stable aYD)");
        tally.add(out, cm.name, cm.report);
    } else if (complex == "PCMa") {
        auto ta = build_Ta(x, N);
        attach_coaction(ta, x);
        auto pcm = build_PCMa(ta, x.hopf);
        tally.add(out, "rho_R on " + ta.name, ta.report);
        tally.add(out, "PCM^a(" + x.hopf.name + "," + x.name + ")", pcm.report);
        std::string dims;
        for (std::size_t n = 0; n < pcm.pcm.size(); ++n)
            dims += (n ? "," : "") + std::to_string(pcm.pcm[n].dim()) + "/" +
                    std::to_string(ta.levels[n].space.dim());
        detail::print_info(out, "dim PCM_n / dim T_n", dims);
    } else if (complex == "BCa") {
        auto bc = build_BCa(x, build_CMa(x, N));
        tally.add(out, bc.name, bc.report);
    } else if (complex == "Tc") {
        auto tc = build_Tc(x, N);
        detail::print_info(out, "structure", "para-cocyclic");
        tally.add(out, tc.name, tc.report);
    } else if (complex == "dual-Tc") {
        auto d = dualize(build_Tc(x, N));
        detail::print_info(out, "structure", "para-cyclic");
        tally.add(out, d.name, d.report);
        detail::print_cyclic_order(out, d, "expected: the dual of T^c is para-cyclic");
    } else if (complex == "bar") {
        auto ta = build_Ta(x, N);
        auto phi = phi_iso(x, ta);
        detail::print_info(out, "structure", "simplicial");
        tally.add(out, "B^a(ad H, H, X)", phi.bar.report);
        tally.add(out, "Phi: T^a -> B^a", phi.report);
    } else {
        throw UsageError("unknown complex '" + complex + "'");
    }
    return detail::finish(out, tally.checks, tally.failures, t, tally.first);
}

/// HH or HC of CM^a in degrees 0..N, from levels 0..N+1.
template <Field K>
int run_homology(std::ostream& out, const ModComod<K>& x, const std::string& complex, Theory theory, std::size_t N,
                 const std::optional<std::string>& csv)
{
    if (complex != "CMa")
        throw UsageError("homology is computed for --complex CMa only");
    detail::Timer t;
    detail::print_fixture(out, std::string("homology --complex CMa --theory ") + (theory == Theory::hh ? "hh" : "hc"), x,
                          N);
    auto cm = build_CMa(x, N + 1);
    HomologyResult res;
    try {
        res = theory == Theory::hh ? hochschild_homology(cm, N) : cyclic_homology(cm, N);
    } catch (const PreconditionError& e) {
        out << "error  " << e.what() << "\n";
        return detail::finish(out, 1, 1, t, e.what());
    }
    detail::Tally tally;
    tally.add(out, to_string(theory) + " complex", res.report);
    const std::string col = to_string(theory) + "_n";
    out << "[table]\n" << std::setw(4) << "n" << "  " << col << "\n";
    for (std::size_t n = 0; n < res.dims.size(); ++n)
        out << std::setw(4) << n << "  " << res.dims[n] << "\n";
    std::string row;
    for (std::size_t n = 0; n < res.dims.size(); ++n)
        row += (n ? "," : "") + std::to_string(res.dims[n]);
    out << "csv  " << to_string(theory) << "," << row << "\n";
    if (csv)
        detail::write_csv(*csv, {"n", to_string(theory)}, {res.dims});
    return detail::finish(out, tally.checks, tally.failures, t, tally.first);
}

/// T^c, its dual, and the β/α/q lemma chain.
template <Field K>
int run_duality(std::ostream& out, const ModComod<K>& x, std::size_t N)
{
    detail::Timer t;
    detail::print_fixture(out, "duality", x, N);
    auto ta = build_Ta(x, N);
    auto tc = build_Tc(x, N);
    auto tcd = dualize(tc);
    auto dm = duality_maps(x, ta, tc, tcd);
    detail::print_info(out, "aYD", detail::yes_no(dm.ayd));
    detail::print_info(out, "stable aYD", detail::yes_no(dm.stable_ayd));
    detail::print_info(out, "beta factors through q", detail::yes_no(dm.beta_factors));
    detail::Tally tally;
    tally.add(out, ta.name, ta.report);
    tally.add(out, tc.name, tc.report);
    tally.add(out, tcd.name, tcd.report);
    tally.add(out, "beta, alpha, q", dm.report);
    return detail::finish(out, tally.checks, tally.failures, t, tally.first);
}

/// Group homology with trivial coefficients and the induced HC sums.
template <Field K>
int run_oracle(std::ostream& out, const CayleyTable& g, const std::string& group_name, const K& f, std::size_t N,
               const std::optional<std::string>& csv)
{
    detail::Timer t;
    out << "hopfcyc oracle\n";
    out << "fixture  G=" << group_name << "  |G|=" << g.order() << "  field=" << f.spec().name() << "  N=" << N << "\n";
    auto h = group_homology_oracle(g, f, N);
    auto hc = cyclic_from_group_homology(h);
    out << "[table]\n" << std::setw(4) << "n" << "  H_n  HC_n\n";
    for (std::size_t n = 0; n <= N; ++n)
        out << std::setw(4) << n << "  " << std::setw(3) << h[n] << "  " << std::setw(4) << hc[n] << "\n";
    if (csv)
        detail::write_csv(*csv, {"n", "H", "HC"}, {h, hc});
    return detail::finish(out, 0, 0, t);
}

/// Resolves --group: a builtin group name, else a Cayley-table file.
inline std::pair<CayleyTable, std::string> load_group(const std::string& arg)
{
    if (auto g = builtin_group(arg))
        return {*g, arg};
    std::ifstream in(arg);
    if (!in)
        throw UsageError("no builtin group or readable Cayley table named '" + arg + "'");
    return {parse_cayley(in), std::filesystem::path(arg).stem().string()};
}

}  // namespace hopfcyc

#endif  // HOPFCYC_CLI_COMMANDS_HPP
