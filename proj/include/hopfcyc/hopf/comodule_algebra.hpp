/**
 * Right comodule algebras over a bialgebra, and modules carrying a right
 * coaction, as used by the cyclic module of a comodule algebra.
 */
#ifndef HOPFCYC_HOPF_COMODULE_ALGEBRA_HPP
#define HOPFCYC_HOPF_COMODULE_ALGEBRA_HPP

#include <string>

#include "hopfcyc/hopf/mod_comod.hpp"

namespace hopfcyc {

/// Y with a right B-coaction Y → Y⊗B that is an algebra map.  Only the
/// bialgebra structure of `bialgebra` is used.
template <Field K>
struct ComoduleAlgebra
{
    std::string name;
    Algebra<K> algebra;
    HopfAlgebra<K> bialgebra;
    LinMap<K> coaction;
};

/// A left B-module with a right B-coaction.
template <Field K>
struct RightModComod
{
    HopfAlgebra<K> bialgebra;
    std::string name;
    VecSpace space;
    LinMap<K> action;          // B⊗X → X
    LinMap<K> right_coaction;  // X → X⊗B
};

/// B as a comodule algebra over itself through Δ.
template <Field K>
ComoduleAlgebra<K> regular_comodule_algebra(const HopfAlgebra<K>& b)
{
    return {b.name, underlying_algebra(b), b, b.comult};
}

/// Y viewed as a comodule algebra over the trivial bialgebra k: y ↦ y⊗1.
template <Field K>
ComoduleAlgebra<K> trivially_coacting(const Algebra<K>& y, const HopfAlgebra<K>& trivial_b)
{
    if (trivial_b.dim() != 1)
        throw PreconditionError("trivially_coacting expects the one-dimensional bialgebra");
    return {"Y", y, trivial_b, tensor(LinMap<K>::identity(y.field, y.space), trivial_b.unit)};
}

/// X with the op of its left coaction as right coaction.
template <Field K>
RightModComod<K> with_right_coaction(const ModComod<K>& x)
{
    return {x.hopf, x.name, x.space, x.action, op_of_left_coaction(x.hopf, x.coaction)};
}

template <Field K>
CheckReport check_comodule_algebra(const ComoduleAlgebra<K>& y)
{
    const auto& a = y.algebra;
    const auto& b = y.bialgebra;
    CheckReport r;
    const auto idY = LinMap<K>::identity(a.field, a.space), idB = b.identity();
    r.expect_equal("algebra associativity", compose(a.mult, tensor(a.mult, idY)), compose(a.mult, tensor(idY, a.mult)));
    r.record("algebra unit", compose(a.mult, tensor(a.unit, idY)) == idY && compose(a.mult, tensor(idY, a.unit)) == idY);
    r.expect_equal("coaction coassociativity", compose(tensor(y.coaction, idB), y.coaction),
                   compose(tensor(idY, b.comult), y.coaction));
    r.expect_equal("coaction counit", compose(tensor(idY, b.counit), y.coaction), idY);
    SlotPipeline<K> p(a.field, tensor(a.space, a.space));
    p.apply(0, y.coaction).apply(2, y.coaction).permute({0, 2, 1, 3}).apply(0, a.mult).apply(1, b.mult);
    r.expect_equal("coaction multiplicative", compose(y.coaction, a.mult), p.build());
    r.expect_equal("coaction unital", compose(y.coaction, a.unit), tensor(a.unit, b.unit));
    return r;
}

template <Field K>
CheckReport check_right_mod_comod(const RightModComod<K>& x)
{
    const auto& b = x.bialgebra;
    CheckReport r;
    r.merge(check_left_module(underlying_algebra(b), LeftModule<K>{x.space, x.action}));
    const auto idX = LinMap<K>::identity(b.field, x.space), idB = b.identity();
    r.expect_equal("right coaction coassociativity", compose(tensor(x.right_coaction, idB), x.right_coaction),
                   compose(tensor(idX, b.comult), x.right_coaction));
    r.expect_equal("right coaction counit", compose(tensor(idX, b.counit), x.right_coaction), idX);
    return r;
}

/// x ↦ x_(1)x_(0); the comodule-algebra complex needs this to be the identity.
template <Field K>
LinMap<K> right_stability_map(const RightModComod<K>& x)
{
    SlotPipeline<K> p(x.bialgebra.field, x.space);
    p.apply(0, x.right_coaction).move(1, 0).apply(0, x.action);
    return p.build(x.space);
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOPF_COMODULE_ALGEBRA_HPP
