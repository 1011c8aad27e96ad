/**
 * Module/comodules over a Hopf algebra: axiom checks, one-dimensional
 * character modules, m-stability, the anti-Yetter-Drinfeld condition, and
 * the op construction between left and right coactions.
 */
#ifndef HOPFCYC_HOPF_MOD_COMOD_HPP
#define HOPFCYC_HOPF_MOD_COMOD_HPP

#include <optional>
#include <string>
#include <utility>

#include "hopfcyc/hopf/hopf_algebra.hpp"

namespace hopfcyc {

template <Field K>
struct ModComod
{
    HopfAlgebra<K> hopf;
    std::string name;
    VecSpace space;
    LinMap<K> action;    // H⊗X → X
    LinMap<K> coaction;  // X → H⊗X, x ↦ x_(−1)⊗x_(0)
    std::optional<LinMap<K>> right_coaction;  // X → X⊗H, x ↦ x_(0)⊗x_(1)

    const K& field() const { return hopf.field; }
    std::size_t dim() const { return space.dim(); }
    LinMap<K> identity() const { return LinMap<K>::identity(hopf.field, space); }
};

enum class OpDirection { left_to_right, right_to_left };

/// ρ_R(m) = m_(0)⊗S(m_(−1)), as a map X → X⊗H.
template <Field K>
LinMap<K> op_of_left_coaction(const HopfAlgebra<K>& h, const LinMap<K>& left)
{
    SlotPipeline<K> p(h.field, left.domain());
    p.apply(0, left).apply(0, h.antipode).move(0, 1);
    return p.build();
}

/// ρ(n) = S⁻¹(n_(1))⊗n_(0), as a map X → H⊗X.
template <Field K>
LinMap<K> op_of_right_coaction(const HopfAlgebra<K>& h, const LinMap<K>& right)
{
    SlotPipeline<K> p(h.field, right.domain());
    p.apply(0, right).apply(1, h.S_inv()).move(1, 0);
    return p.build();
}

/**
 * left_to_right stores the op of the left coaction as the right coaction;
 * right_to_left replaces the left coaction by the op of the stored right one.
 */
template <Field K>
ModComod<K> op_comodule(ModComod<K> x, OpDirection direction)
{
    if (direction == OpDirection::left_to_right) {
        x.right_coaction = op_of_left_coaction(x.hopf, x.coaction);
    } else {
        if (!x.right_coaction)
            throw PreconditionError("op_comodule: '" + x.name + "' has no right coaction");
        x.coaction = op_of_right_coaction(x.hopf, *x.right_coaction);
    }
    return x;
}

template <Field K>
CheckReport check_module_comodule(const ModComod<K>& x)
{
    const auto& h = x.hopf;
    const VecSpace HX = tensor(h.space, x.space);
    if (!(x.action.domain() == HX) || !(x.action.codomain() == x.space) || !(x.coaction.domain() == x.space) ||
        !(x.coaction.codomain() == HX))
        throw ShapeError("module/comodule maps of '" + x.name + "' do not have the shapes H⊗X -> X and X -> H⊗X");
    CheckReport r;
    r.merge(check_left_module(underlying_algebra(h), LeftModule<K>{x.space, x.action}));
    const auto idH = h.identity(), idX = x.identity();
    r.expect_equal("coaction coassociativity", compose(tensor(h.comult, idX), x.coaction),
                   compose(tensor(idH, x.coaction), x.coaction));
    r.expect_equal("coaction counit", compose(tensor(h.counit, idX), x.coaction), idX);
    if (x.right_coaction) {
        bool fits = x.right_coaction->domain() == x.space && x.right_coaction->codomain() == tensor(x.space, h.space);
        if (!fits)
            r.record("right coaction is the op of the left coaction", false, "shape mismatch");
        else
            r.expect_equal("right coaction is the op of the left coaction", *x.right_coaction,
                           op_of_left_coaction(h, x.coaction));
    }
    return r;
}

/// X = k with h·1 = δ(h) and 1 ↦ g⊗1; g must be grouplike and δ a character.
template <Field K>
ModComod<K> character_module(const HopfAlgebra<K>& h, const SparseVec<typename K::value_type>& g,
                             const LinMap<K>& delta, const std::string& name = "k")
{
    if (!is_grouplike(h, g))
        throw PreconditionError("character_module: the coaction element is not grouplike");
    if (!is_character(h, delta))
        throw PreconditionError("character_module: δ is not an algebra map H -> k");
    VecSpace X = VecSpace::primitive("X", {"1"});
    LinMap<K> action(h.field, tensor(h.space, X), X, delta.columns());
    LinMap<K> coaction(h.field, X, tensor(h.space, X), {g});
    return {h, name, X, std::move(action), std::move(coaction), std::nullopt};
}

/// k with the trivial action ε and the trivial coaction 1 ↦ 𝕀⊗1.
template <Field K>
ModComod<K> trivial_module(const HopfAlgebra<K>& h)
{
    return character_module(h, h.unit_vector(), h.counit, "k");
}

/// x ↦ S^m(x_(−1))x_(0)
template <Field K>
LinMap<K> stability_map(const ModComod<K>& x, long m)
{
    return compose(x.action, tensor(x.hopf.antipode_power(m), x.identity()), x.coaction);
}

template <Field K>
bool check_stability(const ModComod<K>& x, long m)
{
    return stability_map(x, m) == x.identity();
}

/// Stable means both 0-stable and 1-stable.
template <Field K>
bool is_stable(const ModComod<K>& x)
{
    return check_stability(x, 0) && check_stability(x, 1);
}

/// Right-hand side of the aYD condition: h⊗x ↦ h_(1)x_(−1)S⁻¹(h_(3))⊗h_(2)x_(0).
template <Field K>
LinMap<K> ayd_rhs(const ModComod<K>& x)
{
    const auto& h = x.hopf;
    SlotPipeline<K> p(h.field, tensor(h.space, x.space));
    comult_run(p, h, 0, 3);                 // h1 h2 h3 x
    p.apply(3, x.coaction);                 // h1 h2 h3 x-1 x0
    p.permute({0, 3, 2, 1, 4});             // h1 x-1 h3 h2 x0
    p.apply(2, h.S_inv());
    multiply_run(p, h, 0, 3);               // H h2 x0
    p.apply(1, x.action);
    return p.build();
}

template <Field K>
bool check_ayd(const ModComod<K>& x)
{
    return compose(x.coaction, x.action) == ayd_rhs(x);
}

template <Field K>
bool is_stable_ayd(const ModComod<K>& x)
{
    return is_stable(x) && check_ayd(x);
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOPF_MOD_COMOD_HPP
