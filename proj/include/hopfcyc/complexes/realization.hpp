/**
 * Truncated (para-)cyclic and cocyclic modules as explicit per-level
 * LinMaps, and the identity suite that verifies them.
 *
 * Conventions for a realization with levels 0..N:
 *   faces        d_0..d_n : V_n → V_{n−1}   (empty at n = 0)
 *   degeneracies s_0..s_n : V_n → V_{n+1}   (present for n < N when built)
 *   cyclic       t_n      : V_n → V_n
 * The cyclic identities checked are d_0 t = d_n, d_i t = t d_{i−1},
 * s_i t = t s_{i−1}, s_0 t = t² s_n.  No signs appear at this layer.
 *
 * Cocyclic modules use the rotation τ∂_j = ∂_{j+1}τ, τσ_j = σ_{j+1}τ, so
 * τ⁻¹ plays the role of the cyclic operator.  A cocyclic module is checked
 * through its transpose: cofaces, codegeneracies and τ⁻¹ transpose to faces,
 * degeneracies and t of a cyclic module.
 */
#ifndef HOPFCYC_COMPLEXES_REALIZATION_HPP
#define HOPFCYC_COMPLEXES_REALIZATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/check_report.hpp"
#include "hopfcyc/exactla.hpp"

namespace hopfcyc {

template <Field K>
struct Level
{
    VecSpace space;
    std::vector<LinMap<K>> faces;
    std::vector<LinMap<K>> degeneracies;
    std::optional<LinMap<K>> cyclic;
    std::optional<LinMap<K>> cyclic_inv;
    std::optional<LinMap<K>> coaction;  // V_n → V_n⊗H
};

template <Field K>
struct ParaCyclicRealization
{
    K field;
    std::string name;
    std::vector<Level<K>> levels;
    bool is_cyclic = false;  // t^{n+1} = id verified on every level
    CheckReport report;

    std::size_t top() const { return levels.size() - 1; }
    bool has_coaction() const { return !levels.empty() && levels.front().coaction.has_value(); }
    const Level<K>& level(std::size_t n) const { return levels.at(n); }
};

/// Cofaces ∂_0..∂_n : V_{n−1} → V_n and codegeneracies σ_0..σ_{n−1} : V_n → V_{n−1}, stored at level n.
template <Field K>
struct CoLevel
{
    VecSpace space;
    std::vector<LinMap<K>> cofaces;
    std::vector<LinMap<K>> codegeneracies;
    LinMap<K> cocyclic;
    std::optional<LinMap<K>> cocyclic_inv;
};

template <Field K>
struct CoCyclicRealization
{
    K field;
    std::string name;
    std::vector<CoLevel<K>> levels;
    CheckReport report;

    std::size_t top() const { return levels.size() - 1; }
};

/// Per-level maps A_n → B_n.
template <Field K>
struct GradedMap
{
    std::string name;
    std::vector<LinMap<K>> maps;
    CheckReport report;

    const LinMap<K>& operator[](std::size_t n) const { return maps.at(n); }
};

enum class StructureKind { simplicial, para_cyclic, cyclic };

inline std::string to_string(StructureKind k)
{
    switch (k) {
    case StructureKind::simplicial:
        return "simplicial";
    case StructureKind::para_cyclic:
        return "para-cyclic";
    case StructureKind::cyclic:
        return "cyclic";
    }
    return "?";
}

/// The verified identities, plus t^{n+1} = id per level (a check only for the cyclic kind).
struct IdentityReport
{
    CheckReport checks;
    std::vector<bool> cyclic_order;

    bool cyclic_order_holds() const
    {
        for (bool b : cyclic_order)
            if (!b)
                return false;
        return true;
    }
};

namespace detail {

/// Collects many equalities into one report entry, keeping the first failure.
class FamilyCheck
{
public:
    explicit FamilyCheck(std::string name) : name_(std::move(name)) {}

    template <Field K>
    void expect(const LinMap<K>& lhs, const LinMap<K>& rhs, const std::string& where)
    {
        used_ = true;
        if (!ok_)
            return;
        if (!(lhs.domain() == rhs.domain()) || !(lhs.codomain() == rhs.codomain())) {
            ok_ = false;
            witness_ = where + ": shape mismatch";
            return;
        }
        if (auto d = lhs.first_difference(rhs)) {
            ok_ = false;
            witness_ = where + ": first failing basis vector " + lhs.domain().label(*d);
        }
    }

    void finish(CheckReport& r)
    {
        if (used_)
            r.record(name_, ok_, witness_);
    }

private:
    std::string name_;
    bool ok_ = true;
    bool used_ = false;
    std::string witness_;
};

inline std::string at(std::size_t n) { return " (n=" + std::to_string(n) + ")"; }

inline std::string ij(std::size_t i, std::size_t j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace detail

/**
 * Exhaustive matrix verification of the identity set of `kind`.  Families
 * are reported per level; degeneracy identities run only where the
 * degeneracies involved were built.
 */
template <Field K>
IdentityReport check_identities(const ParaCyclicRealization<K>& r, StructureKind kind)
{
    using detail::at;
    using detail::FamilyCheck;
    using detail::ij;
    IdentityReport out;
    CheckReport& rep = out.checks;
    const auto& L = r.levels;
    const std::size_t N = r.top();
    auto has_deg = [&](std::size_t n) { return n < N && L[n].degeneracies.size() == n + 1; };

    for (std::size_t n = 0; n <= N; ++n) {
        const auto& lv = L[n];
        if (n >= 1 && lv.faces.size() != n + 1)
            rep.record("face count" + at(n), false, "expected " + std::to_string(n + 1) + " faces");
        // d_i d_j = d_{j−1} d_i for i < j, on V_n.
        if (n >= 2) {
            FamilyCheck f("simplicial d_i d_j = d_(j-1) d_i" + at(n));
            for (std::size_t j = 1; j <= n; ++j)
                for (std::size_t i = 0; i < j; ++i)
                    f.expect(compose(L[n - 1].faces[i], lv.faces[j]), compose(L[n - 1].faces[j - 1], lv.faces[i]),
                             ij(i, j));
            f.finish(rep);
        }
        if (has_deg(n)) {
            const auto id = LinMap<K>::identity(r.field, lv.space);
            // s_i s_j = s_{j+1} s_i for i ≤ j, V_n → V_{n+2}.
            if (has_deg(n + 1)) {
                FamilyCheck f("degeneracy s_i s_j = s_(j+1) s_i" + at(n));
                for (std::size_t j = 0; j <= n; ++j)
                    for (std::size_t i = 0; i <= j; ++i)
                        f.expect(compose(L[n + 1].degeneracies[i], lv.degeneracies[j]),
                                 compose(L[n + 1].degeneracies[j + 1], lv.degeneracies[i]), ij(i, j));
                f.finish(rep);
            }
            // d_i s_j on V_n, with d_i at level n+1.
            FamilyCheck f("face-degeneracy d_i s_j" + at(n));
            for (std::size_t j = 0; j <= n; ++j)
                for (std::size_t i = 0; i <= n + 1; ++i) {
                    auto lhs = compose(L[n + 1].faces[i], lv.degeneracies[j]);
                    if (i == j || i == j + 1)
                        f.expect(lhs, id, ij(i, j));
                    else if (i < j)
                        f.expect(lhs, compose(L[n - 1].degeneracies[j - 1], lv.faces[i]), ij(i, j));
                    else
                        f.expect(lhs, compose(L[n - 1].degeneracies[j], lv.faces[i - 1]), ij(i, j));
                }
            f.finish(rep);
        }
        if (kind == StructureKind::simplicial)
            continue;
        if (!lv.cyclic) {
            rep.record("cyclic operator present" + at(n), false, "no cyclic map at this level");
            continue;
        }
        const auto& t = *lv.cyclic;
        const auto id = LinMap<K>::identity(r.field, lv.space);
        if (n >= 1 && L[n - 1].cyclic) {
            const auto& tm = *L[n - 1].cyclic;
            FamilyCheck f("cyclic-face d_0 t = d_n, d_i t = t d_(i-1)" + at(n));
            f.expect(compose(lv.faces[0], t), lv.faces[n], "i=0");
            for (std::size_t i = 1; i <= n; ++i)
                f.expect(compose(lv.faces[i], t), compose(tm, lv.faces[i - 1]), "i=" + std::to_string(i));
            f.finish(rep);
            // t_{n−1}^{n} d_0 = d_0 t_n^{n+1}, i.e. t^{−n} d_0 t^{n+1} = d_0.
            rep.expect_equal("face lemma" + at(n), compose(power(tm, n), lv.faces[0]), compose(lv.faces[0], power(t, n + 1)));
        }
        if (has_deg(n) && L[n + 1].cyclic) {
            const auto& tp = *L[n + 1].cyclic;
            FamilyCheck f("cyclic-degeneracy s_0 t = t^2 s_n, s_i t = t s_(i-1)" + at(n));
            f.expect(compose(lv.degeneracies[0], t), compose(tp, tp, lv.degeneracies[n]), "i=0");
            for (std::size_t i = 1; i <= n; ++i)
                f.expect(compose(lv.degeneracies[i], t), compose(tp, lv.degeneracies[i - 1]), "i=" + std::to_string(i));
            f.finish(rep);
        }
        if (lv.cyclic_inv)
            rep.record("cyclic inverse" + at(n), compose(t, *lv.cyclic_inv) == id && compose(*lv.cyclic_inv, t) == id);
        bool order = power(t, n + 1) == id;
        out.cyclic_order.push_back(order);
        if (kind == StructureKind::cyclic)
            rep.expect_equal("cyclic order t^(n+1) = id" + at(n), power(t, n + 1), id);
    }
    return out;
}

/// The cyclic module whose maps are the transposes of a cocyclic module's.
template <Field K>
ParaCyclicRealization<K> transpose_cocyclic(const CoCyclicRealization<K>& c)
{
    ParaCyclicRealization<K> r{c.field, c.name + "^T", {}, false, {}};
    const std::size_t N = c.top();
    for (std::size_t n = 0; n <= N; ++n) {
        Level<K> lv;
        lv.space = c.levels[n].space;
        for (const auto& f : c.levels[n].cofaces)
            lv.faces.push_back(f.transpose());
        if (n < N)
            for (const auto& s : c.levels[n + 1].codegeneracies)
                lv.degeneracies.push_back(s.transpose());
        auto inv = c.levels[n].cocyclic_inv ? c.levels[n].cocyclic_inv : inverse(c.levels[n].cocyclic);
        if (!inv)
            throw PreconditionError("transpose_cocyclic: the cocyclic operator of '" + c.name + "' is not invertible");
        lv.cyclic = inv->transpose();
        lv.cyclic_inv = c.levels[n].cocyclic.transpose();
        r.levels.push_back(std::move(lv));
    }
    return r;
}

/// Cocyclic identities, checked on the transpose; kind is para_cyclic or cyclic.
template <Field K>
IdentityReport check_identities(const CoCyclicRealization<K>& c, StructureKind kind)
{
    return check_identities(transpose_cocyclic(c), kind);
}

/**
 * The sub-realization on per-level subspaces W_n, in canonical coordinates.
 * Every face, degeneracy and cyclic map must restrict; nullopt otherwise,
 * with the offending maps recorded in `why`.  Coactions are not carried.
 */
template <Field K>
std::optional<ParaCyclicRealization<K>> restrict_realization(const ParaCyclicRealization<K>& r,
                                                            const std::vector<Subspace<K>>& w, const std::string& name,
                                                            CheckReport& why)
{
    if (w.size() != r.levels.size())
        throw ShapeError("restrict_realization: one subspace per level is required");
    std::vector<VecSpace> spaces;
    for (std::size_t n = 0; n < w.size(); ++n)
        spaces.push_back(w[n].as_space(name + "_" + std::to_string(n)));
    ParaCyclicRealization<K> out{r.field, name, {}, false, {}};
    bool ok = true;
    auto restrict_into = [&](const LinMap<K>& f, std::size_t from, std::size_t to, const std::string& what) {
        auto g = restrict_map(f, w[from], spaces[from], w[to], spaces[to]);
        why.record(what + " restricts" + detail::at(from), g.has_value());
        if (!g) {
            ok = false;
            return LinMap<K>::zero(r.field, spaces[from], spaces[to]);
        }
        return std::move(*g);
    };
    for (std::size_t n = 0; n < w.size(); ++n) {
        const auto& lv = r.levels[n];
        Level<K> nl;
        nl.space = spaces[n];
        for (std::size_t j = 0; j < lv.faces.size(); ++j)
            nl.faces.push_back(restrict_into(lv.faces[j], n, n - 1, "d_" + std::to_string(j)));
        for (std::size_t j = 0; j < lv.degeneracies.size(); ++j)
            nl.degeneracies.push_back(restrict_into(lv.degeneracies[j], n, n + 1, "s_" + std::to_string(j)));
        if (lv.cyclic)
            nl.cyclic = restrict_into(*lv.cyclic, n, n, "t");
        if (lv.cyclic_inv)
            nl.cyclic_inv = restrict_into(*lv.cyclic_inv, n, n, "t^-1");
        out.levels.push_back(std::move(nl));
    }
    if (!ok)
        return std::nullopt;
    return out;
}

/// Sets is_cyclic when every level has t^{n+1} = id.
template <Field K>
void settle_cyclic_flag(ParaCyclicRealization<K>& r)
{
    bool all = true;
    for (std::size_t n = 0; n < r.levels.size() && all; ++n)
        all = r.levels[n].cyclic && power(*r.levels[n].cyclic, n + 1) == LinMap<K>::identity(r.field, r.levels[n].space);
    r.is_cyclic = all;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_COMPLEXES_REALIZATION_HPP
