/**
 * Finite groups as Cayley tables, and their group algebras k[G].
 */
#ifndef HOPFCYC_HOPF_GROUP_ALGEBRA_HPP
#define HOPFCYC_HOPF_GROUP_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/hopf/hopf_algebra.hpp"

namespace hopfcyc {

/// table[i][j] is the index of (element i)·(element j).
struct CayleyTable
{
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table;

    std::size_t order() const { return labels.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
};

struct GroupData
{
    std::size_t identity;
    std::vector<std::size_t> inverse;
};

/// Checks closure, associativity, identity and inverses; throws PreconditionError naming the failure.
inline GroupData validate_group(const CayleyTable& g)
{
    const std::size_t n = g.order();
    if (n == 0)
        throw PreconditionError("not a group: empty table");
    if (g.table.size() != n)
        throw PreconditionError("not a group: table has " + std::to_string(g.table.size()) + " rows for " +
                                std::to_string(n) + " elements");
    for (const auto& row : g.table) {
        if (row.size() != n)
            throw PreconditionError("not a group: ragged table");
        for (std::size_t x : row)
            if (x >= n)
                throw PreconditionError("not a group: product outside the element list");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw PreconditionError("not a group: (" + g.labels[a] + "·" + g.labels[b] + ")·" + g.labels[c] +
                                            " differs from " + g.labels[a] + "·(" + g.labels[b] + "·" + g.labels[c] +
                                            ")");
    std::optional<std::size_t> e;
    for (std::size_t a = 0; a < n && !e; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b)
            ok = g.mul(a, b) == b && g.mul(b, a) == b;
        if (ok)
            e = a;
    }
    if (!e)
        throw PreconditionError("not a group: no identity element");
    GroupData d{*e, std::vector<std::size_t>(n, n)};
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (g.mul(a, b) == *e && g.mul(b, a) == *e)
                d.inverse[a] = b;
        if (d.inverse[a] == n)
            throw PreconditionError("not a group: " + g.labels[a] + " has no inverse");
    }
    return d;
}

inline CayleyTable cyclic_group(std::size_t n)
{
    CayleyTable g;
    for (std::size_t i = 0; i < n; ++i)
        g.labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.table[i][j] = (i + j) % n;
    return g;
}

/// S₃ as permutations of {1,2,3}; composition (στ)(i) = σ(τ(i)).
inline CayleyTable symmetric_group_3()
{
    using Perm = std::array<int, 3>;
    const std::vector<std::pair<std::string, Perm>> elems = {
        {"e", {0, 1, 2}},     {"(12)", {1, 0, 2}},  {"(13)", {2, 1, 0}},
        {"(23)", {0, 2, 1}},  {"(123)", {1, 2, 0}}, {"(132)", {2, 0, 1}},
    };
    CayleyTable g;
    for (const auto& [l, p] : elems)
        g.labels.push_back(l);
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            Perm c{};
            for (int i = 0; i < 3; ++i)
                c[i] = elems[a].second[elems[b].second[i]];
            for (std::size_t k = 0; k < 6; ++k)
                if (elems[k].second == c)
                    g.table[a][b] = k;
        }
    return g;
}

/// Reads "n" followed by n² labels row-major.  The first element is the
/// identity, so row 0 lists the elements and fixes their order.
inline CayleyTable parse_cayley(std::istream& in)
{
    std::size_t n = 0;
    if (!(in >> n) || n == 0)
        throw ParseError("Cayley table must start with a positive element count", 1);
    std::vector<std::string> cells(n * n);
    for (auto& c : cells)
        if (!(in >> c))
            throw ParseError("Cayley table needs " + std::to_string(n * n) + " entries");
    std::string extra;
    if (in >> extra)
        throw ParseError("trailing entry '" + extra + "' after the Cayley table");
    CayleyTable g;
    g.labels.assign(cells.begin(), cells.begin() + static_cast<long>(n));
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(g.labels[i], i).second)
            throw ParseError("duplicate element '" + g.labels[i] + "' in the first row");
    for (std::size_t i = 0; i < n; ++i)
        if (cells[i * n] != g.labels[i])
            throw ParseError("the first element must be the identity: column 0 must repeat row 0");
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto it = index.find(cells[i * n + j]);
            if (it == index.end())
                throw ParseError("unknown element '" + cells[i * n + j] + "' in row " + std::to_string(i + 1));
            g.table[i][j] = it->second;
        }
    return g;
}

/// k[G]: Δg = g⊗g, ε(g) = 1, S(g) = g⁻¹.
template <Field K>
HopfAlgebra<K> group_algebra(const K& field, const CayleyTable& g, const std::string& name = "k[G]")
{
    GroupData d = validate_group(g);
    const std::size_t n = g.order();
    VecSpace H = VecSpace::primitive("H", g.labels);
    VecSpace HH = tensor(H, H), k = VecSpace::unit();
    using V = typename K::value_type;
    std::vector<std::tuple<std::size_t, std::size_t, V>> m, c, eps, s;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            m.emplace_back(g.mul(a, b), a * n + b, field.one());
        c.emplace_back(a * n + a, a, field.one());
        eps.emplace_back(0, a, field.one());
        s.emplace_back(d.inverse[a], a, field.one());
    }
    auto antipode = LinMap<K>::from_triplets(field, H, H, s);
    return {field,
            name,
            H,
            LinMap<K>::from_triplets(field, HH, H, m),
            LinMap<K>::from_triplets(field, k, H, {{d.identity, 0, field.one()}}),
            LinMap<K>::from_triplets(field, H, HH, c),
            LinMap<K>::from_triplets(field, H, k, eps),
            antipode,
            antipode};
}

/**
 * Sweedler's four-dimensional Hopf algebra: basis g^a x^b (labels 1, g, x, gx),
 * g² = 1, x² = 0, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x, S(g) = g, S(x) = −gx.
 */
template <Field K>
HopfAlgebra<K> sweedler_h4(const K& field)
{
    if (field.spec().characteristic == 2)
        throw PreconditionError("Sweedler's algebra needs characteristic different from 2");
    using V = typename K::value_type;
    VecSpace H = VecSpace::primitive("H", {"1", "g", "x", "gx"});
    VecSpace HH = tensor(H, H), k = VecSpace::unit();
    auto idx = [](int a, int b) { return static_cast<std::size_t>(2 * b + a); };  // g^a x^b
    const V one = field.one(), minus = field.neg(field.one());
    std::vector<std::tuple<std::size_t, std::size_t, V>> m, c, eps, s, si;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // g^a x^b g^a2 x^b2 = (−1)^{b·a2} g^{a+a2} x^{b+b2}
                    if (b + b2 > 1)
                        continue;
                    m.emplace_back(idx((a + a2) % 2, b + b2), idx(a, b) * 4 + idx(a2, b2), (b * a2) % 2 ? minus : one);
                }
    // Δ(g^a) = g^a⊗g^a ; Δ(g^a x) = g^a x⊗g^a + g^{a+1}⊗g^a x
    for (int a = 0; a < 2; ++a) {
        c.emplace_back(idx(a, 0) * 4 + idx(a, 0), idx(a, 0), one);
        c.emplace_back(idx(a, 1) * 4 + idx(a, 0), idx(a, 1), one);
        c.emplace_back(idx((a + 1) % 2, 0) * 4 + idx(a, 1), idx(a, 1), one);
        eps.emplace_back(0, idx(a, 0), one);
    }
    // S(1)=1, S(g)=g, S(x)=−gx, S(gx)=x ; S⁻¹(x)=gx, S⁻¹(gx)=−x
    s = {{idx(0, 0), idx(0, 0), one}, {idx(1, 0), idx(1, 0), one}, {idx(1, 1), idx(0, 1), minus}, {idx(0, 1), idx(1, 1), one}};
    si = {{idx(0, 0), idx(0, 0), one}, {idx(1, 0), idx(1, 0), one}, {idx(1, 1), idx(0, 1), one}, {idx(0, 1), idx(1, 1), minus}};
    return {field,
            "sweedler4",
            H,
            LinMap<K>::from_triplets(field, HH, H, m),
            LinMap<K>::from_triplets(field, k, H, {{0, 0, one}}),
            LinMap<K>::from_triplets(field, H, HH, c),
            LinMap<K>::from_triplets(field, H, k, eps),
            LinMap<K>::from_triplets(field, H, H, s),
            LinMap<K>::from_triplets(field, H, H, si)};
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOPF_GROUP_ALGEBRA_HPP
