/**
 * T^a(Y,X) for a right B-comodule algebra Y over a bialgebra B and a left
 * B-module X with right B-coaction satisfying x_(1)x_(0) = x.
 *
 *   τ_n(y^0,…,y^n,x) = (y^n_(0), y^0, …, y^{n−1}, y^n_(1)x)
 *   ∂_j multiplies y^j y^{j+1} for j < n, ∂_n = (y^n_(0)y^0, …, y^n_(1)x)
 *   ρ_R(y^0,…,y^n,x) = (y^0_(0), …, y^n_(0), x_(0)) ⊗ y^0_(1)⋯y^n_(1)x_(1)
 *
 * τ need not be invertible, so PCM is the largest τ-invariant subspace of
 * ker[ρ_R, τ], and the cyclic module CM is the level-wise coinvariants.
 */
#ifndef HOPFCYC_COMPLEXES_COMODULE_ALGEBRA_HPP
#define HOPFCYC_COMPLEXES_COMODULE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/complexes/ta.hpp"
#include "hopfcyc/hopf/comodule_algebra.hpp"

namespace hopfcyc {

template <Field K>
VecSpace chain_space(const ComoduleAlgebra<K>& y, const RightModComod<K>& x, std::size_t k)
{
    return tensor(tensor_power(y.algebra.space, k), x.space);
}

template <Field K>
struct ComoduleAlgebraComplex
{
    ParaCyclicRealization<K> ta;  // cyclic_inv absent; coaction holds ρ_R
    std::vector<Subspace<K>> pcm;
    std::vector<Subspace<K>> cm;
    std::optional<ParaCyclicRealization<K>> pcm_realization;
    std::optional<ParaCyclicRealization<K>> cm_realization;
    CheckReport report;
};

template <Field K>
LinMap<K> comodule_algebra_cyclic(const ComoduleAlgebra<K>& y, const RightModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(y.algebra.field, chain_space(y, x, n + 1));
    p.apply(n, y.coaction).apply(n + 1, x.action).move(n, 0);
    return p.build();
}

template <Field K>
LinMap<K> comodule_algebra_face(const ComoduleAlgebra<K>& y, const RightModComod<K>& x, std::size_t n, std::size_t j)
{
    SlotPipeline<K> p(y.algebra.field, chain_space(y, x, n + 1));
    if (j < n)
        p.apply(j, y.algebra.mult);
    else
        p.apply(n, y.coaction).apply(n + 1, x.action).move(n, 0).apply(0, y.algebra.mult);
    return p.build();
}

template <Field K>
LinMap<K> comodule_algebra_rhoR(const ComoduleAlgebra<K>& y, const RightModComod<K>& x, std::size_t n)
{
    SlotPipeline<K> p(y.algebra.field, chain_space(y, x, n + 1));
    p.apply(n + 1, x.right_coaction);
    for (std::size_t i = n + 1; i-- > 0;)
        p.apply(i, y.coaction);
    // slots: y0_0 y0_1 … yn_0 yn_1 x0 x1
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i <= n; ++i)
        order.push_back(2 * i);
    order.push_back(2 * n + 2);
    for (std::size_t i = 0; i <= n; ++i)
        order.push_back(2 * i + 1);
    order.push_back(2 * n + 3);
    p.permute(order);
    multiply_run(p, y.bialgebra, n + 2, n + 2);
    return p.build();
}

/**
 * Levels 0..N.  Throws PreconditionError unless x_(1)x_(0) = x.  The report
 * holds the simplicial and τ identities on T^a, the PCM checks, and the
 * cyclic suite on CM.
 */
template <Field K>
ComoduleAlgebraComplex<K> build_Ta_comodule_algebra(const ComoduleAlgebra<K>& y, const RightModComod<K>& x,
                                                    std::size_t N)
{
    const K& f = y.algebra.field;
    if (!(right_stability_map(x) == LinMap<K>::identity(f, x.space)))
        throw PreconditionError("build_Ta_comodule_algebra: x_(1)x_(0) = x fails for '" + x.name + "'");
    ComoduleAlgebraComplex<K> out{{f, "T^a(" + y.name + "," + x.name + ")", {}, false, {}}, {}, {}, {}, {}, {}};
    auto& r = out.ta;
    for (std::size_t n = 0; n <= N; ++n) {
        Level<K> lv;
        lv.space = chain_space(y, x, n + 1);
        for (std::size_t j = 0; n >= 1 && j <= n; ++j)
            lv.faces.push_back(comodule_algebra_face(y, x, n, j));
        if (n < N)
            for (std::size_t j = 0; j <= n; ++j) {
                SlotPipeline<K> p(f, lv.space);
                p.apply(j + 1, y.algebra.unit);
                lv.degeneracies.push_back(p.build());
            }
        lv.cyclic = comodule_algebra_cyclic(y, x, n);
        auto rho = comodule_algebra_rhoR(y, x, n);
        const auto id = LinMap<K>::identity(f, lv.space);
        out.report.expect_equal("coaction coassociative" + detail::at(n),
                                compose(tensor(rho, y.bialgebra.identity()), rho),
                                compose(tensor(id, y.bialgebra.comult), rho));
        out.report.expect_equal("coaction counital" + detail::at(n), compose(tensor(id, y.bialgebra.counit), rho), id);
        lv.coaction = std::move(rho);
        r.levels.push_back(std::move(lv));
    }
    r.report.merge(check_identities(r, StructureKind::para_cyclic).checks);
    out.report.merge(r.report);

    auto pcm = build_PCMa(r, y.bialgebra, true);
    out.report.merge(pcm.report);
    out.pcm = std::move(pcm.pcm);
    out.cm = std::move(pcm.invariants);
    out.pcm_realization = std::move(pcm.realization);

    CheckReport why;
    out.cm_realization = restrict_realization(r, out.cm, "CM^a(" + y.name + "," + x.name + ")", why);
    out.report.merge(why, "CM ");
    if (out.cm_realization) {
        auto ids = check_identities(*out.cm_realization, StructureKind::cyclic);
        out.cm_realization->report.merge(ids.checks);
        settle_cyclic_flag(*out.cm_realization);
        out.report.merge(ids.checks, "CM ");
    }
    return out;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_COMPLEXES_COMODULE_ALGEBRA_HPP
