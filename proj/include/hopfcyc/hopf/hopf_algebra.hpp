/**
 * Finite-dimensional Hopf algebras given by structure constants, their axiom
 * check, the dual Hopf algebra, and slot-pipeline helpers for products and
 * iterated coproducts.
 */
#ifndef HOPFCYC_HOPF_HOPF_ALGEBRA_HPP
#define HOPFCYC_HOPF_HOPF_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/check_report.hpp"
#include "hopfcyc/exactla.hpp"
#include "hopfcyc/slots.hpp"

namespace hopfcyc {

template <Field K>
struct HopfAlgebra
{
    using V = typename K::value_type;

    K field;
    std::string name;
    VecSpace space;
    LinMap<K> mult;      // H⊗H → H
    LinMap<K> unit;      // k → H
    LinMap<K> comult;    // H → H⊗H
    LinMap<K> counit;    // H → k
    LinMap<K> antipode;  // H → H
    std::optional<LinMap<K>> antipode_inv;

    std::size_t dim() const { return space.dim(); }

    const LinMap<K>& S_inv() const
    {
        if (!antipode_inv)
            throw PreconditionError("Hopf algebra '" + name + "' has no inverse antipode");
        return *antipode_inv;
    }

    /// S^m for any integer m; negative powers need the inverse antipode.
    LinMap<K> antipode_power(long m) const
    {
        return m >= 0 ? power(antipode, static_cast<std::size_t>(m)) : power(S_inv(), static_cast<std::size_t>(-m));
    }

    LinMap<K> identity() const { return LinMap<K>::identity(field, space); }

    SparseVec<V> basis_vector(std::size_t i) const { return {{{static_cast<Index>(i), field.one()}}}; }
    SparseVec<V> unit_vector() const { return unit.column(0); }

    SparseVec<V> product(const SparseVec<V>& a, const SparseVec<V>& b) const
    {
        SparseAccumulator<K> acc(field, space.dim());
        for (const auto& ea : a)
            for (const auto& eb : b)
                acc.add_scaled(field.mul(ea.value, eb.value), mult.column(ea.index * space.dim() + eb.index));
        return acc.extract();
    }

    V counit_of(const SparseVec<V>& a) const
    {
        auto c = counit.apply(a);
        return c.empty() ? field.zero() : c.entries[0].value;
    }

    /// Δ^{(k)}: H → H^{⊗k}; k = 0 is the counit, k = 1 the identity.
    LinMap<K> iterated_comult(std::size_t k) const
    {
        if (k == 0)
            return counit;
        SlotPipeline<K> p(field, space);
        for (std::size_t i = 1; i < k; ++i)
            p.apply(0, comult);
        return p.build();
    }

    /// True when the multiplication is commutative.
    bool is_commutative() const { return compose(mult, swap_map(field, space, space)) == mult; }
    bool is_cocommutative() const { return compose(swap_map(field, space, space), comult) == comult; }
};

/// Multiply slots [first, first + count) into one H slot; count 0 inserts the unit.
template <Field K>
SlotPipeline<K>& multiply_run(SlotPipeline<K>& p, const HopfAlgebra<K>& h, std::size_t first, std::size_t count)
{
    if (count == 0)
        return p.apply(first, h.unit);
    for (std::size_t i = 1; i < count; ++i)
        p.apply(first, h.mult);
    return p;
}

/// Replace the H slot at `at` by its k-fold coproduct (k slots; k = 0 applies ε).
template <Field K>
SlotPipeline<K>& comult_run(SlotPipeline<K>& p, const HopfAlgebra<K>& h, std::size_t at, std::size_t k)
{
    if (k == 0)
        return p.apply(at, h.counit);
    for (std::size_t i = 1; i < k; ++i)
        p.apply(at, h.comult);
    return p;
}

template <Field K>
CheckReport check_hopf_axioms(const HopfAlgebra<K>& h)
{
    const K& f = h.field;
    const VecSpace& H = h.space;
    const VecSpace HH = tensor(H, H);
    const VecSpace k = VecSpace::unit();
    if (!(h.mult.domain() == HH) || !(h.mult.codomain() == H) || !(h.unit.domain() == k) ||
        !(h.unit.codomain() == H) || !(h.comult.domain() == H) || !(h.comult.codomain() == HH) ||
        !(h.counit.domain() == H) || !(h.counit.codomain() == k) || !(h.antipode.domain() == H) ||
        !(h.antipode.codomain() == H))
        throw ShapeError("structure maps of '" + h.name + "' do not have the shapes of a Hopf algebra on " + H.name());
    const auto id = h.identity();
    CheckReport r;
    r.expect_equal("associativity", compose(h.mult, tensor(h.mult, id)), compose(h.mult, tensor(id, h.mult)));
    r.record("unit", compose(h.mult, tensor(h.unit, id)) == id && compose(h.mult, tensor(id, h.unit)) == id);
    r.expect_equal("coassociativity", compose(tensor(h.comult, id), h.comult), compose(tensor(id, h.comult), h.comult));
    r.record("counit", compose(tensor(h.counit, id), h.comult) == id && compose(tensor(id, h.counit), h.comult) == id);

    SlotPipeline<K> dm(f, HH);
    dm.apply(0, h.comult).apply(2, h.comult).permute({0, 2, 1, 3}).apply(0, h.mult).apply(1, h.mult);
    r.expect_equal("comult multiplicative", compose(h.comult, h.mult), dm.build(HH));
    r.expect_equal("comult unital", compose(h.comult, h.unit), tensor(h.unit, h.unit));
    r.expect_equal("counit multiplicative", compose(h.counit, h.mult), tensor(h.counit, h.counit));
    r.expect_equal("counit unital", compose(h.counit, h.unit), LinMap<K>::identity(f, k));

    auto eta_eps = compose(h.unit, h.counit);
    r.record("antipode", compose(h.mult, tensor(h.antipode, id), h.comult) == eta_eps &&
                             compose(h.mult, tensor(id, h.antipode), h.comult) == eta_eps);
    r.record("antipode bijective", rank(h.antipode) == H.dim());
    if (h.antipode_inv)
        r.record("antipode inverse", compose(h.antipode, *h.antipode_inv) == id && compose(*h.antipode_inv, h.antipode) == id);
    return r;
}

/// Fill in S⁻¹ from S when it is missing and S is invertible.
template <Field K>
HopfAlgebra<K> with_inverse_antipode(HopfAlgebra<K> h)
{
    if (!h.antipode_inv)
        if (auto inv = inverse(h.antipode))
            h.antipode_inv = *inv;
    return h;
}

/// The linear dual H*: every structure map transposed; basis labels gain a trailing '*'.
template <Field K>
HopfAlgebra<K> dual_hopf(const HopfAlgebra<K>& h)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < h.dim(); ++i)
        labels.push_back(h.space.label(i) + "*");
    VecSpace D = VecSpace::primitive(h.space.name() + "*", labels);
    VecSpace DD = tensor(D, D), k = VecSpace::unit();
    HopfAlgebra<K> d{h.field,
                     h.name + "*",
                     D,
                     h.comult.transpose().retyped(DD, D),
                     h.counit.transpose().retyped(k, D),
                     h.mult.transpose().retyped(D, DD),
                     h.unit.transpose().retyped(D, k),
                     h.antipode.transpose().retyped(D, D),
                     std::nullopt};
    if (h.antipode_inv)
        d.antipode_inv = h.antipode_inv->transpose().retyped(D, D);
    return d;
}

/// An algebra map δ: H → k given as a coefficient row; verified multiplicative and unital.
template <Field K>
bool is_character(const HopfAlgebra<K>& h, const LinMap<K>& delta)
{
    if (!(delta.domain() == h.space) || delta.codomain().dim() != 1)
        throw ShapeError("a character is a map H -> k");
    auto d = delta.retyped(h.space, VecSpace::unit());
    return compose(d, h.mult) == tensor(d, d) && compose(d, h.unit) == LinMap<K>::identity(h.field, VecSpace::unit());
}

template <Field K>
bool is_grouplike(const HopfAlgebra<K>& h, const SparseVec<typename K::value_type>& g)
{
    if (!h.field.is_one(h.counit_of(g)))
        return false;
    SparseAccumulator<K> acc(h.field, h.dim() * h.dim());
    for (const auto& a : g)
        for (const auto& b : g)
            acc.add(static_cast<Index>(a.index * h.dim() + b.index), h.field.mul(a.value, b.value));
    return sparse_equal(h.field, h.comult.apply(g), acc.extract());
}

/// A unital associative algebra on a finite-dimensional space.
template <Field K>
struct Algebra
{
    K field;
    VecSpace space;
    LinMap<K> mult;
    LinMap<K> unit;
};

template <Field K>
Algebra<K> underlying_algebra(const HopfAlgebra<K>& h)
{
    return {h.field, h.space, h.mult, h.unit};
}

/// Left module A⊗X → X.
template <Field K>
struct LeftModule
{
    VecSpace space;
    LinMap<K> action;
};

/// Right module X⊗A → X.
template <Field K>
struct RightModule
{
    VecSpace space;
    LinMap<K> action;
};

template <Field K>
CheckReport check_left_module(const Algebra<K>& a, const LeftModule<K>& m)
{
    CheckReport r;
    auto idx = LinMap<K>::identity(a.field, m.space);
    r.expect_equal("left module associativity", compose(m.action, tensor(a.mult, idx)),
                   compose(m.action, tensor(LinMap<K>::identity(a.field, a.space), m.action)));
    r.expect_equal("left module unit", compose(m.action, tensor(a.unit, idx)), idx);
    return r;
}

template <Field K>
CheckReport check_right_module(const Algebra<K>& a, const RightModule<K>& m)
{
    CheckReport r;
    auto idx = LinMap<K>::identity(a.field, m.space);
    r.expect_equal("right module associativity", compose(m.action, tensor(idx, a.mult)),
                   compose(m.action, tensor(m.action, LinMap<K>::identity(a.field, a.space))));
    r.expect_equal("right module unit", compose(m.action, tensor(idx, a.unit)), idx);
    return r;
}

/**
 * Right adjoint action of H on itself, m·ad_h = S⁻¹(h_(1)) m h_(2), as a
 * right module with action H⊗H → H ordered (m, h).
 */
template <Field K>
RightModule<K> adjoint_module(const HopfAlgebra<K>& h)
{
    SlotPipeline<K> p(h.field, tensor(h.space, h.space));
    // (m, h) → (m, h1, h2) → (h1, m, h2) → (S⁻¹h1, m, h2) → product
    p.apply(1, h.comult).move(1, 0).apply(0, h.S_inv());
    multiply_run(p, h, 0, 3);
    return {h.space, p.build(h.space)};
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOPF_HOPF_ALGEBRA_HPP
