/**
 * The para-cyclic module T^a(H,X) = {H^{⊗n+1}⊗X}, its H-coaction and
 * invariants, the bar complex B^a(Y,A,X) and the isomorphism Φ onto
 * B^a(ad(H),H,X), the maps p, i between T^a and CM^a = {H^{⊗n}⊗X}, the
 * cyclic modules CM^a and BC^a, and the para-cyclic comodule PCM^a.
 *
 * Slot layout of T^a_n: h^0, …, h^n, x.  Of CM^a_n and BC^a_n: h^1, …, h^n, x.
 */
#ifndef HOPFCYC_COMPLEXES_TA_HPP
#define HOPFCYC_COMPLEXES_TA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfcyc/complexes/realization.hpp"
#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

/// H^{⊗k}⊗X
template <Field K>
VecSpace chain_space(const ModComod<K>& x, std::size_t k)
{
    return tensor(tensor_power(x.hopf.space, k), x.space);
}

// ---------------------------------------------------------------- T^a

/// τ_n(h^0,…,h^n,x) = (h^n_(1), h^0, …, h^{n−1}, h^n_(2)x)
template <Field K>
LinMap<K> ta_cyclic(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(n, x.hopf.comult).apply(n + 1, x.action).move(n, 0);
    return p.build();
}

/// τ_n⁻¹(k^0,…,k^n,y) = (k^1, …, k^n, k^0_(1), S(k^0_(2))y)
template <Field K>
LinMap<K> ta_cyclic_inv(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(0, x.hopf.comult).apply(1, x.hopf.antipode).move(1, n + 1).apply(n + 1, x.action).move(0, n);
    return p.build();
}

/// Closed-form faces ∂_j : T_n → T_{n−1}: j < n multiplies h^j h^{j+1}; ∂_n = (h^n_(1)h^0, …, h^n_(2)x).
template <Field K>
LinMap<K> ta_face(const ModComod<K>& x, std::size_t n, std::size_t j)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    if (j < n)
        p.apply(j, x.hopf.mult);
    else
        p.apply(n, x.hopf.comult).apply(n + 1, x.action).move(n, 0).apply(0, x.hopf.mult);
    return p.build();
}

/// σ_0 inserts 𝕀 after h^0.
template <Field K>
LinMap<K> ta_degeneracy0(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(1, x.hopf.unit);
    return p.build();
}

/**
 * T^a(H,X) up to level N.  Faces are the closed forms; the report compares
 * them with both conjugation forms τ^j∂_0τ^{−j} and τ^{j−n}∂_0τ^{n+1−j},
 * and records the para-cyclic identity suite.  σ_j = τ^jσ_0τ^{−j}.
 */
template <Field K>
ParaCyclicRealization<K> build_Ta(const ModComod<K>& x, std::size_t N)
{
    ParaCyclicRealization<K> r{x.field(), "T^a(" + x.hopf.name + "," + x.name + ")", {}, false, {}};
    for (std::size_t n = 0; n <= N; ++n) {
        Level<K> lv;
        lv.space = chain_space(x, n + 1);
        lv.cyclic = ta_cyclic(x, n);
        lv.cyclic_inv = ta_cyclic_inv(x, n);
        for (std::size_t j = 0; n >= 1 && j <= n; ++j)
            lv.faces.push_back(ta_face(x, n, j));
        r.levels.push_back(std::move(lv));
    }
    for (std::size_t n = 1; n <= N; ++n) {
        const auto& t = *r.levels[n].cyclic;
        const auto& ti = *r.levels[n].cyclic_inv;
        const auto& tm = *r.levels[n - 1].cyclic;
        const auto& tmi = *r.levels[n - 1].cyclic_inv;
        const auto& d0 = r.levels[n].faces[0];
        detail::FamilyCheck def("faces equal tau^j d_0 tau^-j" + detail::at(n));
        detail::FamilyCheck cor("faces equal tau^(j-n) d_0 tau^(n+1-j)" + detail::at(n));
        for (std::size_t j = 0; j <= n; ++j) {
            def.expect(r.levels[n].faces[j], compose(power(tm, j), d0, power(ti, j)), "j=" + std::to_string(j));
            cor.expect(r.levels[n].faces[j], compose(power(tmi, n - j), d0, power(t, n + 1 - j)), "j=" + std::to_string(j));
        }
        def.finish(r.report);
        cor.finish(r.report);
    }
    for (std::size_t n = 0; n < N; ++n) {
        auto s0 = ta_degeneracy0(x, n);
        const auto& tp = *r.levels[n + 1].cyclic;
        const auto& ti = *r.levels[n].cyclic_inv;
        for (std::size_t j = 0; j <= n; ++j)
            r.levels[n].degeneracies.push_back(compose(power(tp, j), s0, power(ti, j)));
    }
    r.report.merge(check_identities(r, StructureKind::para_cyclic).checks);
    settle_cyclic_flag(r);
    return r;
}

// ---------------------------------------------------------------- coaction and invariants

/// ρ_R(h^0,…,h^n,x) = (h^0_(1),…,h^n_(1),x_(0)) ⊗ h^0_(2)⋯h^n_(2)S(x_(−1))
template <Field K>
LinMap<K> coaction_rhoR(const ModComod<K>& x, std::size_t n)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(n + 1, x.coaction);
    for (std::size_t i = n + 1; i-- > 0;)
        p.apply(i, h.comult);
    // slots: h0_1 h0_2 … hn_1 hn_2 x−1 x0
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i <= n; ++i)
        order.push_back(2 * i);
    order.push_back(2 * n + 3);
    for (std::size_t i = 0; i <= n; ++i)
        order.push_back(2 * i + 1);
    order.push_back(2 * n + 2);
    p.permute(order);
    p.apply(2 * n + 3, h.antipode);
    multiply_run(p, h, n + 2, n + 2);
    return p.build();
}

/// v ↦ v⊗𝕀
template <Field K>
LinMap<K> trivial_coaction(const HopfAlgebra<K>& h, const VecSpace& v)
{
    return tensor(LinMap<K>::identity(h.field, v), h.unit);
}

/// {v : ρ(v) = v⊗𝕀}
template <Field K>
Subspace<K> coaction_invariants(const HopfAlgebra<K>& h, const LinMap<K>& rho)
{
    return kernel(rho - trivial_coaction(h, rho.domain()));
}

/// Attach ρ_R to every level and record coassociativity and counitality.
template <Field K>
void attach_coaction(ParaCyclicRealization<K>& r, const ModComod<K>& x)
{
    const auto& h = x.hopf;
    for (std::size_t n = 0; n <= r.top(); ++n) {
        auto rho = coaction_rhoR(x, n);
        const auto id = LinMap<K>::identity(r.field, r.levels[n].space);
        r.report.expect_equal("coaction coassociative" + detail::at(n), compose(tensor(rho, h.identity()), rho),
                              compose(tensor(id, h.comult), rho));
        r.report.expect_equal("coaction counital" + detail::at(n), compose(tensor(id, h.counit), rho), id);
        r.levels[n].coaction = std::move(rho);
    }
}

/// Level-wise invariants of the stored coaction.
template <Field K>
std::vector<Subspace<K>> invariant_subcomplex(const ParaCyclicRealization<K>& r, const HopfAlgebra<K>& h)
{
    if (!r.has_coaction())
        throw PreconditionError("invariant_subcomplex: '" + r.name + "' carries no coaction");
    std::vector<Subspace<K>> out;
    for (const auto& lv : r.levels)
        out.push_back(coaction_invariants(h, *lv.coaction));
    return out;
}

// ---------------------------------------------------------------- bar complex and Φ

/// B^a_n = Y⊗A^{⊗n}⊗X: d_0 = y·a^1, d_j multiplies a^j a^{j+1}, d_n = a^n x; s_j inserts 1 after a^j.
template <Field K>
ParaCyclicRealization<K> build_bar(const RightModule<K>& y, const Algebra<K>& a, const LeftModule<K>& x, std::size_t N)
{
    ParaCyclicRealization<K> r{a.field, "B^a", {}, false, {}};
    r.report.merge(check_right_module(a, y), "Y: ");
    r.report.merge(check_left_module(a, x), "X: ");
    auto space = [&](std::size_t n) { return tensor(tensor(y.space, tensor_power(a.space, n)), x.space); };
    for (std::size_t n = 0; n <= N; ++n) {
        Level<K> lv;
        lv.space = space(n);
        for (std::size_t j = 0; n >= 1 && j <= n; ++j) {
            SlotPipeline<K> p(a.field, lv.space);
            if (j == 0)
                p.apply(0, y.action);
            else if (j < n)
                p.apply(j, a.mult);
            else
                p.apply(n, x.action);
            lv.faces.push_back(p.build(space(n - 1)));
        }
        for (std::size_t j = 0; n < N && j <= n; ++j) {
            SlotPipeline<K> p(a.field, lv.space);
            p.apply(j + 1, a.unit);
            lv.degeneracies.push_back(p.build(space(n + 1)));
        }
        r.levels.push_back(std::move(lv));
    }
    r.report.merge(check_identities(r, StructureKind::simplicial).checks);
    return r;
}

/// Φ_n(h^0,…,h^n,x) = (h^1_(1)⋯h^n_(1)h^0, h^1_(2), …, h^n_(2), x); with `inverse`, S⁻¹ of the product.
template <Field K>
LinMap<K> phi_map(const ModComod<K>& x, std::size_t n, bool inverse)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    for (std::size_t i = n + 1; i-- > 1;)
        p.apply(i, h.comult);
    // slots: h0, h1_1, h1_2, …, hn_1, hn_2, x
    std::vector<std::size_t> order;
    for (std::size_t i = 1; i <= n; ++i)
        order.push_back(2 * i - 1);
    order.push_back(0);
    for (std::size_t i = 1; i <= n; ++i)
        order.push_back(2 * i);
    order.push_back(2 * n + 1);
    p.permute(order);
    if (inverse) {
        multiply_run(p, h, 0, n);
        p.apply(0, h.S_inv());
        p.apply(0, h.mult);
    } else {
        multiply_run(p, h, 0, n + 1);
    }
    return p.build();
}

/**
 * Φ and Φ⁻¹ between T^a(H,X) and B^a(ad(H),H,X), with the bar complex
 * itself.  The report holds mutual inverseness and face intertwining.
 */
template <Field K>
struct PhiIso
{
    GradedMap<K> phi;
    GradedMap<K> phi_inv;
    ParaCyclicRealization<K> bar;
    CheckReport report;
};

template <Field K>
PhiIso<K> phi_iso(const ModComod<K>& x, const ParaCyclicRealization<K>& ta)
{
    const auto& h = x.hopf;
    h.S_inv();
    PhiIso<K> out{{"Phi", {}, {}},
                  {"Phi^-1", {}, {}},
                  build_bar(adjoint_module(h), underlying_algebra(h), LeftModule<K>{x.space, x.action}, ta.top()),
                  {}};
    for (std::size_t n = 0; n <= ta.top(); ++n) {
        out.phi.maps.push_back(phi_map(x, n, false));
        out.phi_inv.maps.push_back(phi_map(x, n, true));
        const auto id = LinMap<K>::identity(x.field(), ta.levels[n].space);
        out.report.record("Phi Phi^-1 = Phi^-1 Phi = id" + detail::at(n),
                          compose(out.phi[n], out.phi_inv[n]) == id && compose(out.phi_inv[n], out.phi[n]) == id);
        if (n >= 1) {
            detail::FamilyCheck f("Phi intertwines faces" + detail::at(n));
            for (std::size_t j = 0; j <= n; ++j)
                f.expect(compose(out.phi[n - 1], ta.levels[n].faces[j]), compose(out.bar.levels[n].faces[j], out.phi[n]),
                         "j=" + std::to_string(j));
            f.finish(out.report);
        }
    }
    return out;
}

// ---------------------------------------------------------------- p, i and CM^a

/// p_n(h^1,…,h^n,x) = (h^1_(1), …, h^n_(1), x_(−1)S⁻¹(h^1_(3)⋯h^n_(3)), h^1_(2)⋯h^n_(2)x_(0))
template <Field K>
LinMap<K> p_map(const ModComod<K>& x, std::size_t n)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n));
    p.apply(n, x.coaction);
    for (std::size_t i = n; i-- > 0;)
        comult_run(p, h, i, 3);
    // slots: h1_1 h1_2 h1_3 … hn_1 hn_2 hn_3 x−1 x0
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
        order.push_back(3 * i);
    order.push_back(3 * n);
    for (std::size_t i = 0; i < n; ++i)
        order.push_back(3 * i + 2);
    for (std::size_t i = 0; i < n; ++i)
        order.push_back(3 * i + 1);
    order.push_back(3 * n + 1);
    p.permute(order);
    multiply_run(p, h, n + 1, n);
    p.apply(n + 1, h.S_inv());
    p.apply(n, h.mult);
    multiply_run(p, h, n + 1, n);
    p.apply(n + 1, x.action);
    return p.build();
}

/// i_n(h^0,…,h^n,x) = (h^0, …, h^{n−1}, h^n x)
template <Field K>
LinMap<K> i_map(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(n, x.action);
    return p.build();
}

template <Field K>
struct PiMaps
{
    GradedMap<K> p;  // CM_n → T_n
    GradedMap<K> i;  // T_n → CM_n
    CheckReport report;
};

/**
 * p and i up to level N.  The report records i∘p = id (expected when X is
 * 0-stable), p landing in the invariants, and p∘i = id on the invariants.
 */
template <Field K>
PiMaps<K> pi_maps(const ModComod<K>& x, const std::vector<Subspace<K>>& invariants)
{
    x.hopf.S_inv();
    PiMaps<K> out{{"p", {}, {}}, {"i", {}, {}}, {}};
    for (std::size_t n = 0; n < invariants.size(); ++n) {
        out.p.maps.push_back(p_map(x, n));
        out.i.maps.push_back(i_map(x, n));
        const auto& inv = invariants[n];
        out.report.expect_equal("i p = id" + detail::at(n), compose(out.i[n], out.p[n]),
                                LinMap<K>::identity(x.field(), chain_space(x, n)));
        out.report.record("p lands in invariants" + detail::at(n), image(out.p[n]).is_subspace_of(inv));
        bool pi_id = true;
        auto pi = compose(out.p[n], out.i[n]);
        for (const auto& v : inv.basis())
            if (!sparse_equal(x.field(), pi.apply(v), v)) {
                pi_id = false;
                break;
            }
        out.report.record("p i = id on invariants" + detail::at(n), pi_id);
    }
    return out;
}

/// Closed form of t_n for n ≥ 1: (x_(−1)S⁻¹(h^1_(2)⋯h^n_(2)), h^1_(1), …, h^{n−1}_(1), h^n_(1)x_(0)).
template <Field K>
LinMap<K> cm_cyclic_closed(const ModComod<K>& x, std::size_t n)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n));
    p.apply(n, x.coaction);
    for (std::size_t i = n; i-- > 0;)
        p.apply(i, h.comult);
    // slots: h1_1 h1_2 … hn_1 hn_2 x−1 x0
    std::vector<std::size_t> order{2 * n};
    for (std::size_t i = 0; i < n; ++i)
        order.push_back(2 * i + 1);
    for (std::size_t i = 0; i < n; ++i)
        order.push_back(2 * i);
    order.push_back(2 * n + 1);
    p.permute(order);
    multiply_run(p, h, 1, n);
    p.apply(1, h.S_inv());
    p.apply(0, h.mult);
    p.apply(n, x.action);
    return p.build();
}

/// CM^a faces from the closed forms: j < n−1 multiplies h^{j+1}h^{j+2}; d_{n−1} acts h^n on x.
template <Field K>
LinMap<K> cm_face_closed(const ModComod<K>& x, std::size_t n, std::size_t j)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n));
    if (j + 1 < n)
        p.apply(j, x.hopf.mult);
    else
        p.apply(n - 1, x.action);
    return p.build();
}

/// The last CM^a face for n ≥ 2: (x_(−1)S⁻¹(h^1_(2)⋯h^n_(2))h^1_(1), h^2_(1), …, h^n_(1)x_(0)).
template <Field K>
LinMap<K> cm_last_face_closed(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n));
    const auto t = cm_cyclic_closed(x, n);
    p.apply(0, t).apply(0, x.hopf.mult);
    return p.build();
}

/**
 * CM^a(H,X) = {H^{⊗n}⊗X} up to level N, with t_n = i τ p and d_n = d_0 t_n.
 * The report compares t with its closed form, the last face with its
 * closed form, checks τp = pt and ∂_j p = p d_j against T^a, and runs the
 * cyclic suite (para-cyclic when X is not stable aYD).
 */
template <Field K>
ParaCyclicRealization<K> build_CMa(const ModComod<K>& x, std::size_t N)
{
    const auto& h = x.hopf;
    h.S_inv();
    const bool good = is_stable_ayd(x);
    ParaCyclicRealization<K> r{x.field(), "CM^a(" + h.name + "," + x.name + ")", {}, false, {}};
    std::vector<LinMap<K>> pm, tau;
    for (std::size_t n = 0; n <= N; ++n) {
        pm.push_back(p_map(x, n));
        tau.push_back(ta_cyclic(x, n));
        Level<K> lv;
        lv.space = chain_space(x, n);
        lv.cyclic = compose(i_map(x, n), tau[n], pm[n]);
        if (n >= 1) {
            r.report.expect_equal("t equals its closed form" + detail::at(n), *lv.cyclic, cm_cyclic_closed(x, n));
            for (std::size_t j = 0; j < n; ++j)
                lv.faces.push_back(cm_face_closed(x, n, j));
            lv.faces.push_back(compose(lv.faces[0], *lv.cyclic));
            if (n >= 2)
                r.report.expect_equal("last face equals its closed form" + detail::at(n), lv.faces[n],
                                      cm_last_face_closed(x, n));
        }
        if (auto inv = inverse(*lv.cyclic))
            lv.cyclic_inv = std::move(*inv);
        r.levels.push_back(std::move(lv));
    }
    for (std::size_t n = 0; n <= N; ++n) {
        r.report.expect_equal("tau p = p t" + detail::at(n), compose(tau[n], pm[n]), compose(pm[n], *r.levels[n].cyclic));
        if (n >= 1) {
            detail::FamilyCheck f("d_j p = p d_j" + detail::at(n));
            for (std::size_t j = 0; j <= n; ++j)
                f.expect(compose(ta_face(x, n, j), pm[n]), compose(pm[n - 1], r.levels[n].faces[j]), "j=" + std::to_string(j));
            f.finish(r.report);
        }
    }
    r.report.merge(check_identities(r, good ? StructureKind::cyclic : StructureKind::para_cyclic).checks);
    settle_cyclic_flag(r);
    return r;
}

/**
 * BC^a(k,H,X) = {H^{⊗n}⊗X}: δ_0 = ε(h^1)(…), δ_j multiplies h^j h^{j+1},
 * δ_n = h^n x, and t as on CM^a.  The report records t δ_j = d_j t
 * against CM^a and the cyclic suite.
 */
template <Field K>
ParaCyclicRealization<K> build_BCa(const ModComod<K>& x, const ParaCyclicRealization<K>& cma)
{
    const bool good = is_stable_ayd(x);
    ParaCyclicRealization<K> r{x.field(), "BC^a(k," + x.hopf.name + "," + x.name + ")", {}, false, {}};
    if (!good)
        r.report.record("X is stable aYD", false, "the cyclic structure is only expected for stable aYD coefficients");
    for (std::size_t n = 0; n <= cma.top(); ++n) {
        Level<K> lv;
        lv.space = chain_space(x, n);
        lv.cyclic = *cma.levels[n].cyclic;
        lv.cyclic_inv = cma.levels[n].cyclic_inv;
        for (std::size_t j = 0; n >= 1 && j <= n; ++j) {
            SlotPipeline<K> p(x.field(), lv.space);
            if (j == 0)
                p.apply(0, x.hopf.counit);
            else if (j < n)
                p.apply(j - 1, x.hopf.mult);
            else
                p.apply(n - 1, x.action);
            lv.faces.push_back(p.build());
        }
        r.levels.push_back(std::move(lv));
    }
    for (std::size_t n = 1; n <= cma.top(); ++n) {
        detail::FamilyCheck f("t delta_j = d_j t" + detail::at(n));
        for (std::size_t j = 0; j <= n; ++j)
            f.expect(compose(*cma.levels[n - 1].cyclic, r.levels[n].faces[j]),
                     compose(cma.levels[n].faces[j], *cma.levels[n].cyclic), "j=" + std::to_string(j));
        f.finish(r.report);
    }
    for (std::size_t n = 0; n <= cma.top(); ++n)
        r.report.record("t bijective" + detail::at(n), rank(*cma.levels[n].cyclic) == r.levels[n].space.dim());
    r.report.merge(check_identities(r, good ? StructureKind::cyclic : StructureKind::para_cyclic).checks);
    settle_cyclic_flag(r);
    return r;
}

// ---------------------------------------------------------------- PCM^a

/// [ρ, f] = ρ f − (f⊗id_H) ρ
template <Field K>
LinMap<K> coaction_commutator(const HopfAlgebra<K>& h, const LinMap<K>& rho, const LinMap<K>& f)
{
    return compose(rho, f) - compose(tensor(f, h.identity()), rho);
}

/// W ⊆ V is a subcomodule when every H-coordinate of ρ maps W into W.
template <Field K>
bool is_subcomodule(const HopfAlgebra<K>& h, const LinMap<K>& rho, const Subspace<K>& w)
{
    const auto idV = LinMap<K>::identity(h.field, w.ambient());
    for (std::size_t c = 0; c < h.dim(); ++c) {
        auto coord = LinMap<K>::from_triplets(h.field, h.space, VecSpace::unit(), {{0, c, h.field.one()}});
        auto slice = compose(tensor(idV, coord), rho);
        if (!image(slice, w).is_subspace_of(w))
            return false;
    }
    return true;
}

template <Field K>
struct PCMResult
{
    std::vector<Subspace<K>> pcm;          // per level, inside T^a_n
    std::vector<Subspace<K>> invariants;   // T^{a,H}_n
    std::optional<ParaCyclicRealization<K>> realization;
    CheckReport report;
};

/**
 * PCM^a_n = ⋂_j ker[ρ,τ^j], computed as the largest τ^{±1}-invariant
 * subspace of ker[ρ,τ] ∩ ker[ρ,τ⁻¹].  With `forward_only` the inverse is
 * not used (bialgebra case).  The report records the restrictions, the
 * chain T^{a,H} ⊆ PCM ⊆ T^a, PCM^H = T^{a,H}, and [ρ,τ^j] = 0 on PCM for
 * |j| ≤ N+2.
 */
template <Field K>
PCMResult<K> build_PCMa(const ParaCyclicRealization<K>& ta, const HopfAlgebra<K>& h, bool forward_only = false)
{
    if (!ta.has_coaction())
        throw PreconditionError("build_PCMa: '" + ta.name + "' carries no coaction");
    PCMResult<K> out;
    const std::size_t N = ta.top();
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& lv = ta.levels[n];
        const auto& rho = *lv.coaction;
        Subspace<K> w = kernel(coaction_commutator(h, rho, *lv.cyclic));
        Subspace<K> v = w;
        if (forward_only || !lv.cyclic_inv) {
            v = largest_invariant_subspace(w, *lv.cyclic);
        } else {
            w = intersect(w, kernel(coaction_commutator(h, rho, *lv.cyclic_inv)));
            v = largest_bi_invariant_subspace(w, *lv.cyclic, *lv.cyclic_inv);
        }
        auto inv = coaction_invariants(h, rho);
        out.report.record("T^(a,H) in PCM" + detail::at(n), inv.is_subspace_of(v));
        out.report.record("PCM^H = T^(a,H)" + detail::at(n), intersect(v, inv) == inv);
        out.report.record("PCM is a subcomodule" + detail::at(n), is_subcomodule(h, rho, v));
        bool bracket_zero = true;
        const long reach = static_cast<long>(N) + 2;
        for (long j = forward_only ? 0 : -reach; j <= reach && bracket_zero; ++j) {
            auto tj = j >= 0 ? power(*lv.cyclic, static_cast<std::size_t>(j))
                             : power(*lv.cyclic_inv, static_cast<std::size_t>(-j));
            auto br = coaction_commutator(h, rho, tj);
            for (const auto& b : v.basis())
                if (!br.apply(b).empty()) {
                    bracket_zero = false;
                    break;
                }
        }
        out.report.record(std::string(forward_only ? "[rho, tau^j] = 0 on PCM, 0 <= j <= N+2"
                                                   : "[rho, tau^j] = 0 on PCM, |j| <= N+2") +
                              detail::at(n),
                          bracket_zero);
        out.pcm.push_back(std::move(v));
        out.invariants.push_back(std::move(inv));
    }
    out.realization = restrict_realization(ta, out.pcm, "PCM", out.report);
    if (out.realization) {
        auto ids = check_identities(*out.realization, StructureKind::para_cyclic);
        out.report.merge(ids.checks, "PCM ");
    }
    return out;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_COMPLEXES_TA_HPP
