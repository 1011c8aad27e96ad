/**
 * The para-cocyclic module T^c(H,X), the cyclic dual of a para-cocyclic
 * module, and the maps β: T^c∨ → T^a, α: T^a → T^c∨ and the coinvariant
 * quotient q: T^c∨ → CM^c∨ = _H T^c∨.
 *
 * T^c_n and T^a_n share the space H^{⊗n+1}⊗X with slots h^0, …, h^n, x.
 */
#ifndef HOPFCYC_COMPLEXES_DUALITY_HPP
#define HOPFCYC_COMPLEXES_DUALITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hopfcyc/complexes/ta.hpp"

namespace hopfcyc {

/// τ_c(h^0,…,h^n,x) = (S⁻¹(x_(−1))h^n, h^0, …, h^{n−1}, x_(0))
template <Field K>
LinMap<K> tc_cyclic(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(n + 1, x.coaction).apply(n + 1, x.hopf.S_inv()).move(n + 1, n).apply(n, x.hopf.mult).move(n, 0);
    return p.build();
}

/// τ_c⁻¹(k^0,…,k^n,y) = (k^1, …, k^n, y_(−1)k^0, y_(0))
template <Field K>
LinMap<K> tc_cyclic_inv(const ModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(n + 1, x.coaction).move(n + 1, 0).apply(0, x.hopf.mult).move(0, n);
    return p.build();
}

/**
 * T^c(H,X) up to level N: ∂^c_0 applies Δ to h^0, σ^c_0 applies ε to h^1,
 * and the other cofaces and codegeneracies are τ_c-conjugates.  The report
 * holds the para-cocyclic suite.
 */
template <Field K>
CoCyclicRealization<K> build_Tc(const ModComod<K>& x, std::size_t N)
{
    x.hopf.S_inv();
    CoCyclicRealization<K> c{x.field(), "T^c(" + x.hopf.name + "," + x.name + ")", {}, {}};
    std::vector<LinMap<K>> t, ti;
    for (std::size_t n = 0; n <= N; ++n) {
        t.push_back(tc_cyclic(x, n));
        ti.push_back(tc_cyclic_inv(x, n));
    }
    for (std::size_t n = 0; n <= N; ++n) {
        CoLevel<K> lv{chain_space(x, n + 1), {}, {}, t[n], ti[n]};
        if (n >= 1) {
            SlotPipeline<K> d0(x.field(), chain_space(x, n));
            d0.apply(0, x.hopf.comult);
            auto del0 = d0.build();
            for (std::size_t j = 0; j <= n; ++j)
                lv.cofaces.push_back(compose(power(t[n], j), del0, power(ti[n - 1], j)));
            SlotPipeline<K> s0(x.field(), lv.space);
            s0.apply(1, x.hopf.counit);
            auto sig0 = s0.build();
            for (std::size_t j = 0; j < n; ++j)
                lv.codegeneracies.push_back(compose(power(t[n - 1], j), sig0, power(ti[n], j)));
        }
        c.levels.push_back(std::move(lv));
    }
    c.report.merge(check_identities(c, StructureKind::para_cyclic).checks);
    return c;
}

/**
 * The cyclic dual: ∂∨_0 = σ_{n−1}τ_n⁻¹, ∂∨_{i+1} = σ_i, s∨_j = ∂_j, t∨ = τ.
 * With the rotation τ∂_j = ∂_{j+1}τ this is the only placement of τ^{±1}
 * that yields a para-cyclic module.  The report holds its identity suite.
 */
template <Field K>
ParaCyclicRealization<K> dualize(const CoCyclicRealization<K>& c)
{
    ParaCyclicRealization<K> r{c.field, c.name + "^dual", {}, false, {}};
    const std::size_t N = c.top();
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& cl = c.levels[n];
        auto tinv = cl.cocyclic_inv ? cl.cocyclic_inv : inverse(cl.cocyclic);
        if (!tinv)
            throw PreconditionError("dualize: the cocyclic operator of '" + c.name + "' is not invertible");
        Level<K> lv;
        lv.space = cl.space;
        lv.cyclic = cl.cocyclic;
        lv.cyclic_inv = *tinv;
        if (n >= 1) {
            lv.faces.push_back(compose(cl.codegeneracies[n - 1], *tinv));
            for (std::size_t i = 0; i < n; ++i)
                lv.faces.push_back(cl.codegeneracies[i]);
        }
        if (n < N)
            for (std::size_t j = 0; j <= n; ++j)
                lv.degeneracies.push_back(c.levels[n + 1].cofaces[j]);
        r.levels.push_back(std::move(lv));
    }
    r.report.merge(check_identities(r, StructureKind::para_cyclic).checks);
    settle_cyclic_flag(r);
    return r;
}

/// β_n = (S(h^n_(3))x_(−1)h^0_(1), S(h^0_(2))h^1_(1), …, S(h^{n−1}_(2))h^n_(1), S(h^n_(2))x_(0))
template <Field K>
LinMap<K> beta_map(const ModComod<K>& x, std::size_t n)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    p.apply(n + 1, x.coaction);
    std::vector<std::size_t> order;
    if (n == 0) {
        comult_run(p, h, 0, 3);  // a1 a2 a3 x−1 x0
        order = {2, 3, 0, 1, 4};
    } else {
        comult_run(p, h, n, 3);
        for (std::size_t i = n; i-- > 0;)
            p.apply(i, h.comult);
        // a0_1 a0_2 … a(n−1)_1 a(n−1)_2 an_1 an_2 an_3 x−1 x0
        order = {2 * n + 2, 2 * n + 3, 0};
        for (std::size_t i = 1; i <= n; ++i) {
            order.push_back(2 * (i - 1) + 1);
            order.push_back(2 * i);
        }
        order.push_back(2 * n + 1);
        order.push_back(2 * n + 4);
    }
    p.permute(order);
    // groups: [S· x−1 ·] [S· ·]×n [S· x0]
    p.apply(0, h.antipode);
    for (std::size_t i = 0; i <= n; ++i)
        p.apply(3 + 2 * i, h.antipode);
    p.apply(3 + 2 * n, x.action);
    for (std::size_t i = n; i-- > 0;)
        p.apply(3 + 2 * i, h.mult);
    multiply_run(p, h, 0, 3);
    return p.build();
}

/// α_n: slot k = h^0_(k+1)h^1_(k)⋯h^k_(1); the X slot is h^0_(n+2)⋯h^n_(2)x.
template <Field K>
LinMap<K> alpha_map(const ModComod<K>& x, std::size_t n)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n + 1));
    std::vector<std::size_t> offset(n + 2, 0);
    for (std::size_t i = 0; i <= n; ++i)
        offset[i + 1] = offset[i] + (n + 2 - i);
    for (std::size_t i = n + 1; i-- > 0;)
        comult_run(p, h, i, n + 2 - i);
    // leg ℓ (1-based) of h^i sits at offset[i] + ℓ − 1 and goes to slot i + ℓ − 1; the last leg goes to X.
    std::vector<std::size_t> order;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            order.push_back(offset[i] + (k + 1 - i) - 1);
    for (std::size_t i = 0; i <= n; ++i)
        order.push_back(offset[i] + (n + 2 - i) - 1);
    order.push_back(offset[n + 1]);
    p.permute(order);
    // group k has k+1 factors and starts at k(k+1)/2; the X group has n+1 factors then x.
    const std::size_t xstart = (n + 1) * (n + 2) / 2;
    multiply_run(p, h, xstart, n + 1);
    p.apply(xstart, x.action);
    for (std::size_t k = n + 1; k-- > 0;)
        multiply_run(p, h, k * (k + 1) / 2, k + 1);
    return p.build();
}

/// The diagonal action L: H⊗T_n → T_n, h⊗(h^0,…,x) ↦ (h_(1)h^0, …, h_(n+1)h^n, h_(n+2)x).
template <Field K>
LinMap<K> diagonal_action(const ModComod<K>& x, std::size_t n)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(x.field(), chain_space(x, n + 2));
    comult_run(p, h, 0, n + 2);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i <= n + 1; ++i) {
        order.push_back(i);
        order.push_back(n + 2 + i);
    }
    p.permute(order);
    p.apply(2 * n + 2, x.action);
    for (std::size_t i = n + 1; i-- > 0;)
        p.apply(2 * i, h.mult);
    return p.build();
}

template <Field K>
struct DualityMaps
{
    GradedMap<K> beta;
    GradedMap<K> alpha;
    std::vector<Quotient<K>> q;
    std::vector<Subspace<K>> cma;  // T^{a,H}_n, the image of CM^a under p
    std::optional<ParaCyclicRealization<K>> cmc_dual;  // _H T^c∨ when the structure descends
    bool ayd = false;
    bool stable_ayd = false;
    bool beta_factors = false;
    CheckReport report;
};

/**
 * β, α and q up to level N, with the lemma chain as matrix checks:
 * ∂_1β = βσ^c_0, σ_0β = β∂^c_0, τβ = βτ_c, β a morphism T^c∨ → T^a,
 * βα = id on T^{a,H}, qαβ = q, and β factoring through q iff X is aYD
 * (stability plays no part in either direction).  When β factors the
 * structure is induced on CM^c∨; for stable aYD X it is checked cyclic and
 * q∘α on T^{a,H} is checked bijective and intertwining.
 */
template <Field K>
DualityMaps<K> duality_maps(const ModComod<K>& x, const ParaCyclicRealization<K>& ta,
                            const CoCyclicRealization<K>& tc, const ParaCyclicRealization<K>& tcd)
{
    const auto& h = x.hopf;
    const K& f = x.field();
    const std::size_t N = ta.top();
    if (tc.top() != N || tcd.top() != N)
        throw ShapeError("duality_maps: T^a, T^c and its dual must share the truncation");
    DualityMaps<K> out{{"beta", {}, {}}, {"alpha", {}, {}}, {}, {}, std::nullopt, check_ayd(x), is_stable_ayd(x), true, {}};
    auto& rep = out.report;
    for (std::size_t n = 0; n <= N; ++n) {
        out.beta.maps.push_back(beta_map(x, n));
        out.alpha.maps.push_back(alpha_map(x, n));
        out.cma.push_back(coaction_invariants(h, coaction_rhoR(x, n)));
        auto L = diagonal_action(x, n);
        auto rel = image(L - tensor(h.counit, LinMap<K>::identity(f, ta.levels[n].space)));
        out.q.push_back(quotient(ta.levels[n].space, rel, "CMc_" + std::to_string(n)));
    }
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& b = out.beta[n];
        const auto at = detail::at(n);
        if (n >= 1)
            rep.expect_equal("d_1 beta = beta sigma^c_0" + at, compose(ta.levels[n].faces[1], b),
                             compose(out.beta[n - 1], tc.levels[n].codegeneracies[0]));
        if (n < N)
            rep.expect_equal("sigma_0 beta = beta d^c_0" + at, compose(ta.levels[n].degeneracies[0], b),
                             compose(out.beta[n + 1], tc.levels[n + 1].cofaces[0]));
        rep.expect_equal("tau beta = beta tau_c" + at, compose(*ta.levels[n].cyclic, b),
                         compose(b, tc.levels[n].cocyclic));
        detail::FamilyCheck morph("beta is a para-cyclic morphism" + at);
        for (std::size_t j = 0; n >= 1 && j <= n; ++j)
            morph.expect(compose(ta.levels[n].faces[j], b), compose(out.beta[n - 1], tcd.levels[n].faces[j]),
                         "d_" + std::to_string(j));
        for (std::size_t j = 0; n < N && j <= n; ++j)
            morph.expect(compose(ta.levels[n].degeneracies[j], b), compose(out.beta[n + 1], tcd.levels[n].degeneracies[j]),
                         "s_" + std::to_string(j));
        morph.expect(compose(*ta.levels[n].cyclic, b), compose(b, *tcd.levels[n].cyclic), "t");
        morph.finish(rep);

        auto ba = compose(b, out.alpha[n]);
        bool ok = true;
        for (const auto& v : out.cma[n].basis())
            if (!sparse_equal(f, ba.apply(v), v)) {
                ok = false;
                break;
            }
        rep.record("beta alpha = id on T^(a,H)" + at, ok);
        rep.expect_equal("q alpha beta = q" + at, compose(out.q[n].projection, out.alpha[n], b), out.q[n].projection);
        bool factors = true;
        for (const auto& w : out.q[n].relations.basis())
            if (!b.apply(w).empty()) {
                factors = false;
                break;
            }
        out.beta_factors = out.beta_factors && factors;
    }
    rep.record("beta factors through q iff X is aYD", out.beta_factors == out.ayd,
               std::string("factors: ") + (out.beta_factors ? "yes" : "no") + ", aYD: " + (out.ayd ? "yes" : "no"));
    if (!out.beta_factors)
        return out;

    // The structure of T^c∨ induced on the coinvariants.
    ParaCyclicRealization<K> cmc{f, "CM^c(" + h.name + "," + x.name + ")^dual", {}, false, {}};
    bool descends = true;
    auto induce = [&](const LinMap<K>& m, std::size_t from, std::size_t to) {
        auto g = induced_map(m, out.q[from], out.q[to]);
        if (!g) {
            descends = false;
            return LinMap<K>::zero(f, out.q[from].space, out.q[to].space);
        }
        return std::move(*g);
    };
    for (std::size_t n = 0; n <= N; ++n) {
        const auto& lv = tcd.levels[n];
        Level<K> ql;
        ql.space = out.q[n].space;
        for (const auto& d : lv.faces)
            ql.faces.push_back(induce(d, n, n - 1));
        for (const auto& s : lv.degeneracies)
            ql.degeneracies.push_back(induce(s, n, n + 1));
        ql.cyclic = induce(*lv.cyclic, n, n);
        ql.cyclic_inv = induce(*lv.cyclic_inv, n, n);
        cmc.levels.push_back(std::move(ql));
    }
    rep.record("T^c dual structure descends to coinvariants", descends);
    if (!descends)
        return out;
    cmc.report.merge(check_identities(cmc, out.stable_ayd ? StructureKind::cyclic : StructureKind::para_cyclic).checks);
    settle_cyclic_flag(cmc);
    rep.merge(cmc.report, "CM^c dual ");
    if (!out.stable_ayd) {
        out.cmc_dual = std::move(cmc);
        return out;
    }

    // q∘α on T^{a,H}: bijective and intertwining faces and cyclic maps.
    std::vector<LinMap<K>> qa;
    std::vector<VecSpace> spaces;
    for (std::size_t n = 0; n <= N; ++n) {
        spaces.push_back(out.cma[n].as_space("CMa_" + std::to_string(n)));
        qa.push_back(compose(out.q[n].projection, out.alpha[n], out.cma[n].inclusion(spaces[n])));
        rep.record("q alpha bijective on T^(a,H)" + detail::at(n),
                   spaces[n].dim() == out.q[n].space.dim() && rank(qa[n]) == spaces[n].dim(),
                   std::to_string(spaces[n].dim()) + " vs " + std::to_string(out.q[n].space.dim()));
    }
    for (std::size_t n = 0; n <= N; ++n) {
        detail::FamilyCheck fc("q alpha intertwines cyclic structure" + detail::at(n));
        auto t = restrict_map(*ta.levels[n].cyclic, out.cma[n], spaces[n], out.cma[n], spaces[n]);
        if (!t) {
            rep.record("tau restricts to T^(a,H)" + detail::at(n), false);
            continue;
        }
        fc.expect(compose(qa[n], *t), compose(*cmc.levels[n].cyclic, qa[n]), "t");
        for (std::size_t j = 0; n >= 1 && j <= n; ++j) {
            auto d = restrict_map(ta.levels[n].faces[j], out.cma[n], spaces[n], out.cma[n - 1], spaces[n - 1]);
            if (!d) {
                rep.record("d_" + std::to_string(j) + " restricts to T^(a,H)" + detail::at(n), false);
                continue;
            }
            fc.expect(compose(qa[n - 1], *d), compose(cmc.levels[n].faces[j], qa[n]), "d_" + std::to_string(j));
        }
        fc.finish(rep);
    }
    out.cmc_dual = std::move(cmc);
    return out;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_COMPLEXES_DUALITY_HPP
