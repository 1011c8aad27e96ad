/**
 * Subspaces in canonical reduced row echelon form, and the subspace
 * calculus built on them: kernels, images, intersections, quotients,
 * restrictions, and invariant-subspace fixpoints.
 */
#ifndef HOPFCYC_SUBSPACE_HPP
#define HOPFCYC_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcyc/elimination.hpp"
#include "hopfcyc/lin_map.hpp"

namespace hopfcyc {

template <Field K>
class Subspace
{
public:
    using V = typename K::value_type;
    using Vec = SparseVec<V>;

    static Subspace zero(const K& field, const VecSpace& ambient) { return Subspace(field, ambient, {}); }

    static Subspace full(const K& field, const VecSpace& ambient)
    {
        std::vector<Vec> basis(ambient.dim());
        for (std::size_t i = 0; i < ambient.dim(); ++i)
            basis[i].entries.push_back({static_cast<Index>(i), field.one()});
        return Subspace(field, ambient, std::move(basis));
    }

    /// Canonical span of arbitrary vectors.
    static Subspace span(const K& field, const VecSpace& ambient, const std::vector<Vec>& vectors)
    {
        Eliminator<K> elim(field, ambient.dim(), PivotPolicy::leading);
        for (const auto& v : vectors) {
            for (const auto& e : v)
                if (e.index >= ambient.dim())
                    throw ShapeError("spanning vector outside ambient space");
            if (elim.rank() == ambient.dim())
                break;
            elim.insert(v);
        }
        return Subspace(field, ambient, elim.reduced_rows());
    }

    const K& field() const { return field_; }
    const VecSpace& ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    Index pivot(std::size_t i) const { return basis_[i].leading(); }

    /// v minus its projection along the basis onto pivot coordinates; zero iff v ∈ this.
    Vec residual(const Vec& v) const
    {
        Vec r = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const V* c = r.find(pivot(i));
            if (c) {
                V minus = field_.neg(*c);
                r = sparse_axpy(field_, r, minus, basis_[i]);
            }
        }
        return r;
    }

    bool contains(const Vec& v) const { return residual(v).empty(); }

    /// Coordinates of v in the canonical basis; nullopt when v ∉ this.
    std::optional<Vec> coords(const Vec& v) const
    {
        Vec c;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (const V* x = v.find(pivot(i)))
                c.entries.push_back({static_cast<Index>(i), *x});
        SparseAccumulator<K> acc(field_, ambient_.dim());
        acc.add_scaled(field_.one(), v);
        for (const auto& e : c)
            acc.add_scaled(field_.neg(e.value), basis_[e.index]);
        if (!acc.extract().empty())
            return std::nullopt;
        return c;
    }

    bool is_subspace_of(const Subspace& other) const
    {
        require_same_ambient(other);
        for (const auto& b : basis_)
            if (!other.contains(b))
                return false;
        return true;
    }

    /// The subspace as an abstract space; basis labels name the pivot coordinates.
    VecSpace as_space(const std::string& name) const
    {
        std::vector<std::string> labels;
        labels.reserve(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            labels.push_back("<" + ambient_.label(pivot(i)) + ">");
        return VecSpace::primitive(name, std::move(labels));
    }

    LinMap<K> inclusion(const VecSpace& as) const
    {
        if (as.dim() != dim())
            throw ShapeError("inclusion: space dimension differs from subspace dimension");
        return LinMap<K>(field_, as, ambient_, basis_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        if (!(a.ambient_ == b.ambient_) || a.basis_.size() != b.basis_.size())
            return false;
        for (std::size_t i = 0; i < a.basis_.size(); ++i)
            if (!sparse_equal(a.field_, a.basis_[i], b.basis_[i]))
                return false;
        return true;
    }

    void require_same_ambient(const Subspace& other) const
    {
        if (!(ambient_ == other.ambient_))
            throw ShapeError("subspaces live in different ambient spaces");
    }

private:
    Subspace(const K& field, VecSpace ambient, std::vector<Vec> basis)
        : field_(field), ambient_(std::move(ambient)), basis_(std::move(basis))
    {
    }

    K field_;
    VecSpace ambient_;
    std::vector<Vec> basis_;
};

/// Canonical basis of {v : f(v) = 0}.
template <Field K>
Subspace<K> kernel(const LinMap<K>& f)
{
    using V = typename K::value_type;
    const K& field = f.field();
    LinMap<K> rowsT = f.transpose();  // columns of rowsT are the rows of f
    Eliminator<K> elim(field, f.cols(), PivotPolicy::leading);
    for (const auto& r : rowsT.columns()) {
        if (elim.rank() == f.cols())
            break;
        elim.insert(r);
    }
    auto reduced = elim.reduced_rows();
    std::vector<long> row_of_pivot(f.cols(), -1);
    for (std::size_t k = 0; k < reduced.size(); ++k)
        row_of_pivot[reduced[k].leading()] = static_cast<long>(k);
    // Column j of the reduced rows, for each free j.
    std::vector<std::vector<std::pair<Index, V>>> by_column(f.cols());
    for (std::size_t k = 0; k < reduced.size(); ++k)
        for (const auto& e : reduced[k])
            if (row_of_pivot[e.index] < 0)
                by_column[e.index].emplace_back(reduced[k].leading(), e.value);
    std::vector<SparseVec<V>> basis;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        if (row_of_pivot[j] >= 0)
            continue;
        SparseVec<V> v;
        for (const auto& [p, c] : by_column[j])
            v.entries.push_back({p, field.neg(c)});
        v.entries.push_back({static_cast<Index>(j), field.one()});
        std::sort(v.entries.begin(), v.entries.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
        basis.push_back(std::move(v));
    }
    return Subspace<K>::span(field, f.domain(), basis);
}

/// Canonical column space of f.
template <Field K>
Subspace<K> image(const LinMap<K>& f)
{
    return Subspace<K>::span(f.field(), f.codomain(), f.columns());
}

/// Image of a subspace under f.
template <Field K>
Subspace<K> image(const LinMap<K>& f, const Subspace<K>& a)
{
    if (!(f.domain() == a.ambient()))
        throw ShapeError("image: subspace is not in the domain of the map");
    std::vector<SparseVec<typename K::value_type>> vs;
    vs.reserve(a.dim());
    for (const auto& b : a.basis())
        vs.push_back(f.apply(b));
    return Subspace<K>::span(f.field(), f.codomain(), vs);
}

namespace detail {

/// span{ Σ λ_i a_i : λ ∈ kernel(constraints) } where column i of `constraints` belongs to a_i.
template <Field K>
Subspace<K> combinations_in_kernel(const Subspace<K>& a, const LinMap<K>& constraints)
{
    Subspace<K> lambdas = kernel(constraints);
    if (lambdas.dim() == a.dim())
        return a;
    const K& field = a.field();
    std::vector<SparseVec<typename K::value_type>> vs;
    SparseAccumulator<K> acc(field, a.ambient().dim());
    for (const auto& lam : lambdas.basis()) {
        for (const auto& e : lam)
            acc.add_scaled(e.value, a.basis()[e.index]);
        vs.push_back(acc.extract());
    }
    return Subspace<K>::span(field, a.ambient(), vs);
}

}  // namespace detail

/// A ∩ B; both must share the ambient space.
template <Field K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b)
{
    a.require_same_ambient(b);
    if (b.dim() == b.ambient().dim())
        return a;
    if (a.dim() == a.ambient().dim())
        return b;
    VecSpace coords = VecSpace::numbered("coords", a.dim(), "c");
    LinMap<K> m(a.field(), coords, a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i)
        m.set_column(i, b.residual(a.basis()[i]));
    return detail::combinations_in_kernel(a, m);
}

template <Field K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b)
{
    a.require_same_ambient(b);
    auto vs = a.basis();
    vs.insert(vs.end(), b.basis().begin(), b.basis().end());
    return Subspace<K>::span(a.field(), a.ambient(), vs);
}

/// {v ∈ A : f_k(v) ∈ B for every k}; each f_k maps A's ambient into B's ambient.
template <Field K>
Subspace<K> constrained_preimage(const Subspace<K>& a, const std::vector<const LinMap<K>*>& maps, const Subspace<K>& b)
{
    const std::size_t m = b.ambient().dim();
    VecSpace coords = VecSpace::numbered("coords", a.dim(), "c");
    VecSpace stacked = VecSpace::numbered("stack", m * maps.size(), "s");
    LinMap<K> constraints(a.field(), coords, stacked);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        SparseVec<typename K::value_type> col;
        for (std::size_t k = 0; k < maps.size(); ++k) {
            if (!(maps[k]->domain() == a.ambient()) || !(maps[k]->codomain() == b.ambient()))
                throw ShapeError("constrained_preimage: map does not fit the subspaces");
            auto r = b.residual(maps[k]->apply(a.basis()[i]));
            for (auto& e : r.entries)
                col.entries.push_back({static_cast<Index>(e.index + k * m), std::move(e.value)});
        }
        constraints.set_column(i, std::move(col));
    }
    return detail::combinations_in_kernel(a, constraints);
}

/**
 * Largest V ⊆ W with t(V) ⊆ V and t_inv(V) ⊆ V, by iterating
 * V ← V ∩ t⁻¹(V) ∩ t(V) from V = W until the dimension stabilizes.
 * Since t is invertible, t(V) = {v : t_inv(v) ∈ V}.
 */
template <Field K>
Subspace<K> largest_bi_invariant_subspace(const Subspace<K>& w, const LinMap<K>& t, const LinMap<K>& t_inv)
{
    if (!(t.domain() == w.ambient()) || !(t.codomain() == w.ambient()) || !(t_inv.domain() == w.ambient()) ||
        !(t_inv.codomain() == w.ambient()))
        throw ShapeError("largest_bi_invariant_subspace: maps must be endomorphisms of the ambient space");
    if (!(compose(t, t_inv) == LinMap<K>::identity(t.field(), t.domain())) ||
        !(compose(t_inv, t) == LinMap<K>::identity(t.field(), t.domain())))
        throw PreconditionError("largest_bi_invariant_subspace: t is not invertible with the given inverse");
    Subspace<K> v = w;
    while (true) {
        Subspace<K> next = constrained_preimage(v, {&t, &t_inv}, v);
        if (next.dim() == v.dim())
            return v;
        v = std::move(next);
    }
}

/// Largest V ⊆ W with t(V) ⊆ V (no inverse needed).
template <Field K>
Subspace<K> largest_invariant_subspace(const Subspace<K>& w, const LinMap<K>& t)
{
    Subspace<K> v = w;
    while (true) {
        Subspace<K> next = constrained_preimage(v, {&t}, v);
        if (next.dim() == v.dim())
            return v;
        v = std::move(next);
    }
}

/// Quotient V/W: the space spanned by the non-pivot coordinates of W, and the projection.
template <Field K>
struct Quotient
{
    VecSpace space;
    LinMap<K> projection;
    Subspace<K> relations;
    std::vector<Index> representatives;  // ambient index lifting each quotient basis vector
};

template <Field K>
Quotient<K> quotient(const VecSpace& v, const Subspace<K>& w, const std::string& name = "quotient")
{
    if (!(w.ambient() == v))
        throw ShapeError("quotient: subspace does not live in the given space");
    const K& field = w.field();
    std::vector<long> slot(v.dim(), -1);
    std::vector<bool> is_pivot(v.dim(), false);
    for (std::size_t i = 0; i < w.dim(); ++i)
        is_pivot[w.pivot(i)] = true;
    std::vector<std::string> labels;
    std::vector<Index> reps;
    for (std::size_t j = 0; j < v.dim(); ++j)
        if (!is_pivot[j]) {
            slot[j] = static_cast<long>(labels.size());
            labels.push_back("[" + v.label(j) + "]");
            reps.push_back(static_cast<Index>(j));
        }
    VecSpace q = VecSpace::primitive(name, std::move(labels));
    LinMap<K> proj(field, v, q);
    for (std::size_t j = 0; j < v.dim(); ++j) {
        SparseVec<typename K::value_type> ej;
        ej.entries.push_back({static_cast<Index>(j), field.one()});
        auto r = w.residual(ej);
        SparseVec<typename K::value_type> col;
        for (auto& e : r.entries)
            col.entries.push_back({static_cast<Index>(slot[e.index]), std::move(e.value)});
        proj.set_column(j, std::move(col));
    }
    return {q, std::move(proj), w, std::move(reps)};
}

/**
 * f restricted to A and corestricted to B, in canonical coordinates.
 * nullopt when f(A) ⊄ B.
 */
template <Field K>
std::optional<LinMap<K>> restrict_map(const LinMap<K>& f, const Subspace<K>& a, const VecSpace& a_space,
                                      const Subspace<K>& b, const VecSpace& b_space)
{
    if (!(f.domain() == a.ambient()) || !(f.codomain() == b.ambient()))
        throw ShapeError("restrict_map: subspaces do not fit the map");
    LinMap<K> out(f.field(), a_space, b_space);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto c = b.coords(f.apply(a.basis()[i]));
        if (!c)
            return std::nullopt;
        out.set_column(i, std::move(*c));
    }
    return out;
}

/// The map induced on quotients V/W → V'/W' (requires f(W) ⊆ W'); nullopt otherwise.
template <Field K>
std::optional<LinMap<K>> induced_map(const LinMap<K>& f, const Quotient<K>& from, const Quotient<K>& to)
{
    if (!(f.domain() == from.projection.domain()) || !(f.codomain() == to.projection.domain()))
        throw ShapeError("induced_map: quotients do not fit the map");
    for (const auto& w : from.relations.basis())
        if (!to.relations.contains(f.apply(w)))
            return std::nullopt;
    LinMap<K> out(f.field(), from.space, to.space);
    for (std::size_t k = 0; k < from.representatives.size(); ++k)
        out.set_column(k, to.projection.apply(f.column(from.representatives[k])));
    return out;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_SUBSPACE_HPP
