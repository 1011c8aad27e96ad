/**
 * Line-oriented fixture files.
 *
 *   field Q | field GF <p>
 *   algebra <builtin> | group:<name or cayley file> | sweedler4 | dual-of:<builtin>
 *   algebra explicit          module character:<g>,<counit | v_1,...,v_d>
 *     name <text>             module explicit
 *     space <name>              name <text>
 *     basis <labels...>         space <name>
 *     mult a b -> c : q         basis <labels...>
 *     unit a : q                action h x -> y : q
 *     comult a -> b c : q       coaction x -> h y : q
 *     counit a : q            end
 *     antipode a -> b : q
 *     antipode_inv a -> b : q
 *   end
 *   N <n>
 *
 * '#' starts a comment; ": q" may be omitted for coefficient 1.  Parsing is
 * field-independent; load() materializes the objects over a concrete field
 * and runs the axiom checks.  emit_spec() always writes the explicit form.
 */
#ifndef HOPFCYC_CLI_SPEC_FILE_HPP
#define HOPFCYC_CLI_SPEC_FILE_HPP

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

struct SpecLine
{
    int line = 0;
    std::vector<std::string> tokens;
};

struct SpecBlock
{
    int line = 0;
    std::string head;  // text after the keyword, e.g. "explicit" or "group:Z2"
    std::vector<SpecLine> body;
};

struct SpecDocument
{
    FieldSpec field = FieldSpec::rationals();
    std::optional<SpecBlock> algebra;
    std::optional<SpecBlock> module;
    std::optional<std::size_t> N;
    std::filesystem::path base_dir;  // resolves relative Cayley-table paths
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::size_t parse_count(const std::string& s, int line, const std::string& what)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != s.size() || s.empty() || s[0] == '-')
        throw ParseError(what + " must be a nonnegative integer, got '" + s + "'", line);
    return v;
}

}  // namespace detail

inline SpecDocument parse_spec_text(const std::string& text, const std::filesystem::path& base_dir = ".")
{
    SpecDocument doc;
    doc.base_dir = base_dir;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::optional<SpecBlock>* open = nullptr;
    bool saw_field = false;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto tok = detail::split_ws(raw);
        if (tok.empty())
            continue;
        if (open) {
            if (tok[0] == "end") {
                if (tok.size() != 1)
                    throw ParseError("'end' takes no arguments", line);
                if ((*open)->body.empty())
                    throw ParseError("empty " + std::string(open == &doc.algebra ? "algebra" : "module") + " block",
                                     (*open)->line);
                open = nullptr;
            } else {
                (*open)->body.push_back({line, std::move(tok)});
            }
            continue;
        }
        const std::string& key = tok[0];
        if (key == "field") {
            if (saw_field)
                throw ParseError("field declared twice", line);
            saw_field = true;
            if (tok.size() == 2 && tok[1] == "Q")
                doc.field = FieldSpec::rationals();
            else if (tok.size() == 3 && tok[1] == "GF") {
                try {
                    doc.field = FieldSpec::prime(static_cast<std::uint32_t>(detail::parse_count(tok[2], line, "characteristic")));
                } catch (const PreconditionError& e) {
                    throw ParseError(e.what(), line);
                }
            } else
                throw ParseError("expected 'field Q' or 'field GF <p>'", line);
        } else if (key == "algebra" || key == "module") {
            auto& slot = key == "algebra" ? doc.algebra : doc.module;
            if (slot)
                throw ParseError(key + " declared twice", line);
            if (tok.size() != 2)
                throw ParseError("expected '" + key + " <kind>'", line);
            slot = SpecBlock{line, tok[1], {}};
            if (tok[1] == "explicit")
                open = &slot;
        } else if (key == "N") {
            if (tok.size() != 2)
                throw ParseError("expected 'N <n>'", line);
            doc.N = detail::parse_count(tok[1], line, "N");
        } else {
            throw ParseError("unknown keyword '" + key + "'", line);
        }
    }
    if (open)
        throw ParseError("block opened here is missing 'end'", (*open)->line);
    if (!doc.algebra)
        throw ParseError("no algebra declared");
    if (!doc.module)
        throw ParseError("no module declared");
    return doc;
}

inline SpecDocument parse_spec_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open spec file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_text(ss.str(), path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

template <Field K>
struct LoadedSpec
{
    HopfAlgebra<K> hopf;
    ModComod<K> module;
    std::optional<std::size_t> N;
};

namespace detail {

template <Field K>
typename K::value_type parse_coefficient(const K& f, const std::string& s, int line)
{
    auto parts = split_on(s, '/');
    try {
        if (parts.size() == 1)
            return f.from_fraction(mpz_class(parts[0]), mpz_class(1));
        if (parts.size() == 2)
            return f.from_fraction(mpz_class(parts[0]), mpz_class(parts[1]));
    } catch (const std::invalid_argument&) {
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), line);
    }
    throw ParseError("bad coefficient '" + s + "'", line);
}

/// "lhs... -> rhs... : q" or "lhs... : q" (no arrow); coefficient defaults to 1.
struct Entry
{
    std::vector<std::string> lhs, rhs;
    std::string coeff = "1";
    bool arrow = false;
};

inline Entry split_entry(const SpecLine& l)
{
    Entry e;
    std::size_t i = 1;
    for (; i < l.tokens.size() && l.tokens[i] != "->" && l.tokens[i] != ":"; ++i)
        e.lhs.push_back(l.tokens[i]);
    if (i < l.tokens.size() && l.tokens[i] == "->") {
        e.arrow = true;
        for (++i; i < l.tokens.size() && l.tokens[i] != ":"; ++i)
            e.rhs.push_back(l.tokens[i]);
    }
    if (i < l.tokens.size()) {
        if (i + 2 != l.tokens.size())
            throw ParseError("expected exactly one coefficient after ':'", l.line);
        e.coeff = l.tokens[i + 1];
    }
    return e;
}

inline std::string rest_of(const SpecLine& l)
{
    std::string out;
    for (std::size_t i = 1; i < l.tokens.size(); ++i)
        out += (i > 1 ? " " : "") + l.tokens[i];
    return out;
}

/// Builds maps from labelled sparse entries of an explicit block.
template <Field K>
class EntryTable
{
public:
    using V = typename K::value_type;

    EntryTable(const K& f) : f_(f) {}

    void add(const std::string& map, std::size_t row, std::size_t col, V v)
    {
        entries_[map].emplace_back(row, col, std::move(v));
    }

    bool has(const std::string& map) const { return entries_.count(map) > 0; }

    LinMap<K> build(const std::string& map, const VecSpace& dom, const VecSpace& cod) const
    {
        auto it = entries_.find(map);
        if (it == entries_.end())
            return LinMap<K>::zero(f_, dom, cod);
        return LinMap<K>::from_triplets(f_, dom, cod, it->second);
    }

private:
    K f_;
    std::map<std::string, std::vector<std::tuple<std::size_t, std::size_t, V>>> entries_;
};

inline std::size_t label_index(const std::map<std::string, std::size_t>& idx, const std::string& label, int line,
                               const std::string& where)
{
    auto it = idx.find(label);
    if (it == idx.end())
        throw ParseError("unknown " + where + " basis label '" + label + "'", line);
    return it->second;
}

/// Common header lines of an explicit block: name, space, basis.
struct BlockHeader
{
    std::string name;
    std::string space;
    std::vector<std::string> basis;
    std::map<std::string, std::size_t> index;
};

inline BlockHeader read_header(const SpecBlock& b, const std::string& default_name, const std::string& default_space)
{
    BlockHeader h{default_name, default_space, {}, {}};
    bool saw_basis = false;
    for (const auto& l : b.body) {
        const auto& k = l.tokens[0];
        if (k == "name") {
            if (l.tokens.size() < 2)
                throw ParseError("'name' needs a value", l.line);
            h.name = rest_of(l);
        } else if (k == "space") {
            if (l.tokens.size() != 2)
                throw ParseError("expected 'space <name>'", l.line);
            h.space = l.tokens[1];
        } else if (k == "basis") {
            if (saw_basis)
                throw ParseError("basis declared twice", l.line);
            saw_basis = true;
            h.basis.assign(l.tokens.begin() + 1, l.tokens.end());
            if (h.basis.empty())
                throw ParseError("empty basis", l.line);
            for (std::size_t i = 0; i < h.basis.size(); ++i)
                if (!h.index.emplace(h.basis[i], i).second)
                    throw ParseError("duplicate basis label '" + h.basis[i] + "'", l.line);
        }
    }
    if (!saw_basis)
        throw ParseError("explicit block has no 'basis' line", b.line);
    return h;
}

inline void expect_shape(const Entry& e, const SpecLine& l, std::size_t lhs, bool arrow, std::size_t rhs,
                         const std::string& form)
{
    if (e.lhs.size() != lhs || e.arrow != arrow || e.rhs.size() != rhs)
        throw ParseError("expected '" + form + "'", l.line);
}

template <Field K>
HopfAlgebra<K> explicit_algebra(const K& f, const SpecBlock& b)
{
    auto hd = read_header(b, "H", "H");
    VecSpace H = VecSpace::primitive(hd.space, hd.basis), HH = tensor(H, H), k = VecSpace::unit();
    const std::size_t d = H.dim();
    EntryTable<K> t(f);
    for (const auto& l : b.body) {
        const auto& key = l.tokens[0];
        if (key == "name" || key == "space" || key == "basis")
            continue;
        auto e = split_entry(l);
        auto q = parse_coefficient(f, e.coeff, l.line);
        auto at = [&](const std::string& s) { return label_index(hd.index, s, l.line, "algebra"); };
        if (key == "mult") {
            expect_shape(e, l, 2, true, 1, "mult a b -> c : q");
            t.add(key, at(e.rhs[0]), at(e.lhs[0]) * d + at(e.lhs[1]), q);
        } else if (key == "unit") {
            expect_shape(e, l, 1, false, 0, "unit a : q");
            t.add(key, at(e.lhs[0]), 0, q);
        } else if (key == "comult") {
            expect_shape(e, l, 1, true, 2, "comult a -> b c : q");
            t.add(key, at(e.rhs[0]) * d + at(e.rhs[1]), at(e.lhs[0]), q);
        } else if (key == "counit") {
            expect_shape(e, l, 1, false, 0, "counit a : q");
            t.add(key, 0, at(e.lhs[0]), q);
        } else if (key == "antipode" || key == "antipode_inv") {
            expect_shape(e, l, 1, true, 1, key + " a -> b : q");
            t.add(key, at(e.rhs[0]), at(e.lhs[0]), q);
        } else {
            throw ParseError("unknown algebra entry '" + key + "'", l.line);
        }
    }
    for (const char* req : {"mult", "unit", "comult", "counit", "antipode"})
        if (!t.has(req))
            throw ParseError(std::string("explicit algebra has no '") + req + "' entries", b.line);
    HopfAlgebra<K> h{f,
                     hd.name,
                     H,
                     t.build("mult", HH, H),
                     t.build("unit", k, H),
                     t.build("comult", H, HH),
                     t.build("counit", H, k),
                     t.build("antipode", H, H),
                     std::nullopt};
    if (t.has("antipode_inv"))
        h.antipode_inv = t.build("antipode_inv", H, H);
    return h;
}

template <Field K>
HopfAlgebra<K> tagged_algebra(const K& f, const SpecBlock& b, const std::filesystem::path& base)
{
    const std::string& tag = b.head;
    try {
        if (tag.rfind("group:", 0) == 0) {
            const std::string arg = tag.substr(6);
            if (auto g = builtin_group(arg))
                return group_algebra(f, *g, arg);
            std::filesystem::path p = base / arg;
            std::ifstream in(p);
            if (!in)
                throw ParseError("cannot open Cayley table '" + p.string() + "'", b.line);
            return group_algebra(f, parse_cayley(in), p.stem().string());
        }
        if (tag.rfind("dual-of:", 0) == 0) {
            auto d = dual_hopf(builtin_hopf(f, tag.substr(8)));
            d.name = "dual:" + tag.substr(8);
            return d;
        }
        return builtin_hopf(f, tag);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), b.line);
    }
}

/// Resolves a character-module label; "1" means the unit when no basis vector is called "1".
template <Field K>
SparseVec<typename K::value_type> element_of(const HopfAlgebra<K>& h, const std::string& label, int line)
{
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (h.space.label(i) == label)
            return h.basis_vector(i);
    if (label == "1")
        return h.unit_vector();
    throw ParseError("unknown algebra basis label '" + label + "'", line);
}

template <Field K>
ModComod<K> character_from_tag(const HopfAlgebra<K>& h, const SpecBlock& b)
{
    const std::string prefix = "character:";
    if (b.head.rfind(prefix, 0) != 0)
        throw ParseError("module must be 'character:<g>,<delta>' or 'explicit'", b.line);
    auto parts = split_on(b.head.substr(prefix.size()), ',');
    if (parts.size() < 2)
        throw ParseError("character module needs '<g>,<counit | values>'", b.line);
    auto g = element_of(h, parts[0], b.line);
    LinMap<K> delta = h.counit;
    if (!(parts.size() == 2 && parts[1] == "counit")) {
        if (parts.size() - 1 != h.dim())
            throw ParseError("character needs " + std::to_string(h.dim()) + " values, got " +
                                 std::to_string(parts.size() - 1),
                             b.line);
        std::vector<std::tuple<std::size_t, std::size_t, typename K::value_type>> t;
        for (std::size_t i = 0; i < h.dim(); ++i)
            t.emplace_back(0, i, parse_coefficient(h.field, parts[i + 1], b.line));
        delta = LinMap<K>::from_triplets(h.field, h.space, VecSpace::unit(), t);
    }
    try {
        return character_module(h, g, delta, "k(" + parts[0] + "," + (parts.size() == 2 ? parts[1] : "delta") + ")");
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), b.line);
    }
}

template <Field K>
ModComod<K> explicit_module(const HopfAlgebra<K>& h, const SpecBlock& b)
{
    auto hd = read_header(b, "X", "X");
    VecSpace X = VecSpace::primitive(hd.space, hd.basis);
    const std::size_t d = X.dim();
    std::map<std::string, std::size_t> hidx;
    for (std::size_t i = 0; i < h.dim(); ++i)
        hidx.emplace(h.space.label(i), i);
    EntryTable<K> t(h.field);
    for (const auto& l : b.body) {
        const auto& key = l.tokens[0];
        if (key == "name" || key == "space" || key == "basis")
            continue;
        auto e = split_entry(l);
        auto q = parse_coefficient(h.field, e.coeff, l.line);
        auto xi = [&](const std::string& s) { return label_index(hd.index, s, l.line, "module"); };
        auto hi = [&](const std::string& s) { return label_index(hidx, s, l.line, "algebra"); };
        if (key == "action") {
            expect_shape(e, l, 2, true, 1, "action h x -> y : q");
            t.add(key, xi(e.rhs[0]), hi(e.lhs[0]) * d + xi(e.lhs[1]), q);
        } else if (key == "coaction") {
            expect_shape(e, l, 1, true, 2, "coaction x -> h y : q");
            t.add(key, hi(e.rhs[0]) * d + xi(e.rhs[1]), xi(e.lhs[0]), q);
        } else {
            throw ParseError("unknown module entry '" + key + "'", l.line);
        }
    }
    const VecSpace HX = tensor(h.space, X);
    return {h, hd.name, X, t.build("action", HX, X), t.build("coaction", X, HX), std::nullopt};
}

inline std::string failure_text(const CheckReport& r)
{
    auto e = r.first_failure();
    return e ? e->name + (e->witness.empty() ? "" : " (" + e->witness + ")") : "";
}

}  // namespace detail

/// Axiom failures at load time; the message names the failing axiom and its witness.
class AxiomError : public Error
{
public:
    using Error::Error;
};

/**
 * Materializes the document over `f`; S⁻¹ is computed when the file does not
 * give it.  With `enforce_axioms` a failed Hopf or module/comodule axiom
 * throws AxiomError; without it the caller is expected to report them.
 */
template <Field K>
LoadedSpec<K> load(const SpecDocument& doc, const K& f, bool enforce_axioms = true)
{
    const auto& ab = *doc.algebra;
    HopfAlgebra<K> h = ab.head == "explicit" ? detail::explicit_algebra(f, ab) : detail::tagged_algebra(f, ab, doc.base_dir);
    h = with_inverse_antipode(std::move(h));
    if (!enforce_axioms) {
        const auto& mb = *doc.module;
        ModComod<K> x = mb.head == "explicit" ? detail::explicit_module(h, mb) : detail::character_from_tag(h, mb);
        return {std::move(h), std::move(x), doc.N};
    }
    auto hr = check_hopf_axioms(h);
    if (!hr.all_passed())
        throw AxiomError("algebra (line " + std::to_string(ab.line) + ") fails " + detail::failure_text(hr));
    const auto& mb = *doc.module;
    ModComod<K> x = mb.head == "explicit" ? detail::explicit_module(h, mb) : detail::character_from_tag(h, mb);
    auto mr = check_module_comodule(x);
    if (!mr.all_passed())
        throw AxiomError("module (line " + std::to_string(mb.line) + ") fails " + detail::failure_text(mr));
    return {std::move(h), std::move(x), doc.N};
}

/// The explicit form of a loaded fixture; re-parsing it reproduces every tensor exactly.
template <Field K>
std::string emit_spec(const HopfAlgebra<K>& h, const ModComod<K>& x, std::optional<std::size_t> N = std::nullopt)
{
    auto check_token = [](const std::string& s) {
        if (s.empty() || s.find_first_of(" \t#") != std::string::npos || s == "->" || s == ":")
            throw PreconditionError("emit_spec: '" + s + "' cannot be written as a single token");
        return s;
    };
    const K& f = h.field;
    const std::size_t d = h.dim(), dx = x.dim();
    auto lab = [&](std::size_t i) { return h.space.label(i); };
    auto xlab = [&](std::size_t i) { return x.space.label(i); };
    std::ostringstream o;
    const auto spec = f.spec();
    o << "field " << (spec.kind == FieldSpec::Kind::rationals ? "Q" : "GF " + std::to_string(spec.characteristic)) << "\n";
    o << "algebra explicit\n  name " << h.name << "\n  space " << check_token(h.space.name()) << "\n  basis";
    for (std::size_t i = 0; i < d; ++i)
        o << " " << check_token(lab(i));
    o << "\n";
    auto each = [&](const LinMap<K>& m, auto&& line) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& e : m.column(c))
                line(static_cast<std::size_t>(e.index), c, f.to_string(e.value));
    };
    each(h.mult, [&](std::size_t r, std::size_t c, const std::string& q) {
        o << "  mult " << lab(c / d) << " " << lab(c % d) << " -> " << lab(r) << " : " << q << "\n";
    });
    each(h.unit, [&](std::size_t r, std::size_t, const std::string& q) { o << "  unit " << lab(r) << " : " << q << "\n"; });
    each(h.comult, [&](std::size_t r, std::size_t c, const std::string& q) {
        o << "  comult " << lab(c) << " -> " << lab(r / d) << " " << lab(r % d) << " : " << q << "\n";
    });
    each(h.counit, [&](std::size_t, std::size_t c, const std::string& q) { o << "  counit " << lab(c) << " : " << q << "\n"; });
    each(h.antipode, [&](std::size_t r, std::size_t c, const std::string& q) {
        o << "  antipode " << lab(c) << " -> " << lab(r) << " : " << q << "\n";
    });
    if (h.antipode_inv)
        each(*h.antipode_inv, [&](std::size_t r, std::size_t c, const std::string& q) {
            o << "  antipode_inv " << lab(c) << " -> " << lab(r) << " : " << q << "\n";
        });
    o << "end\nmodule explicit\n  name " << x.name << "\n  space " << check_token(x.space.name()) << "\n  basis";
    for (std::size_t i = 0; i < dx; ++i)
        o << " " << check_token(xlab(i));
    o << "\n";
    each(x.action, [&](std::size_t r, std::size_t c, const std::string& q) {
        o << "  action " << lab(c / dx) << " " << xlab(c % dx) << " -> " << xlab(r) << " : " << q << "\n";
    });
    each(x.coaction, [&](std::size_t r, std::size_t c, const std::string& q) {
        o << "  coaction " << xlab(c) << " -> " << lab(r / dx) << " " << xlab(r % dx) << " : " << q << "\n";
    });
    o << "end\n";
    if (N)
        o << "N " << *N << "\n";
    return o.str();
}

}  // namespace hopfcyc

#endif  // HOPFCYC_CLI_SPEC_FILE_HPP
