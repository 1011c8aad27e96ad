/**
 * Sparse linear maps between labeled spaces, stored column by column
 * (column j is the image of basis vector j of the domain).
 */
#ifndef HOPFCYC_LIN_MAP_HPP
#define HOPFCYC_LIN_MAP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfcyc/field.hpp"
#include "hopfcyc/sparse_vector.hpp"
#include "hopfcyc/vec_space.hpp"

namespace hopfcyc {

template <Field K>
class LinMap
{
public:
    using V = typename K::value_type;
    using Column = SparseVec<V>;

    LinMap(K field, VecSpace domain, VecSpace codomain)
        : field_(std::move(field)), domain_(std::move(domain)), codomain_(std::move(codomain)),
          cols_(domain_.dim())
    {
    }

    LinMap(K field, VecSpace domain, VecSpace codomain, std::vector<Column> cols)
        : field_(std::move(field)), domain_(std::move(domain)), codomain_(std::move(codomain)),
          cols_(std::move(cols))
    {
        if (cols_.size() != domain_.dim())
            throw ShapeError("column count does not match domain dimension");
        for (const auto& c : cols_)
            for (const auto& e : c)
                if (e.index >= codomain_.dim())
                    throw ShapeError("entry row index outside codomain");
    }

    static LinMap identity(const K& field, const VecSpace& space)
    {
        LinMap m(field, space, space);
        for (std::size_t j = 0; j < space.dim(); ++j)
            m.cols_[j].entries.push_back({static_cast<Index>(j), field.one()});
        return m;
    }

    static LinMap zero(const K& field, const VecSpace& domain, const VecSpace& codomain)
    {
        return LinMap(field, domain, codomain);
    }

    /// From (row, col, value) triplets; repeated positions are summed.
    static LinMap from_triplets(const K& field, const VecSpace& domain, const VecSpace& codomain,
                                const std::vector<std::tuple<std::size_t, std::size_t, V>>& triplets)
    {
        std::vector<std::vector<std::pair<Index, V>>> buckets(domain.dim());
        for (const auto& [r, c, v] : triplets) {
            if (r >= codomain.dim() || c >= domain.dim())
                throw ShapeError("triplet outside map shape");
            buckets[c].emplace_back(static_cast<Index>(r), v);
        }
        LinMap m(field, domain, codomain);
        SparseAccumulator<K> acc(field, codomain.dim());
        for (std::size_t c = 0; c < buckets.size(); ++c) {
            for (const auto& [r, v] : buckets[c])
                acc.add(r, v);
            m.cols_[c] = acc.extract();
        }
        return m;
    }

    /// From a dense row-major integer matrix (rows = codomain).
    static LinMap from_rows(const K& field, const VecSpace& domain, const VecSpace& codomain,
                            const std::vector<std::vector<long>>& rows)
    {
        if (rows.size() != codomain.dim())
            throw ShapeError("row count does not match codomain dimension");
        std::vector<std::tuple<std::size_t, std::size_t, V>> t;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != domain.dim())
                throw ShapeError("row length does not match domain dimension");
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c] != 0)
                    t.emplace_back(r, c, field.from_int(rows[r][c]));
        }
        return from_triplets(field, domain, codomain, t);
    }

    const K& field() const { return field_; }
    const VecSpace& domain() const { return domain_; }
    const VecSpace& codomain() const { return codomain_; }
    std::size_t rows() const { return codomain_.dim(); }
    std::size_t cols() const { return domain_.dim(); }

    const Column& column(std::size_t j) const { return cols_.at(j); }
    const std::vector<Column>& columns() const { return cols_; }

    void set_column(std::size_t j, Column c) { cols_.at(j) = std::move(c); }

    V entry(std::size_t row, std::size_t col) const
    {
        const V* v = cols_.at(col).find(static_cast<Index>(row));
        return v ? *v : field_.zero();
    }

    std::size_t nnz() const
    {
        std::size_t n = 0;
        for (const auto& c : cols_)
            n += c.size();
        return n;
    }

    bool is_zero() const
    {
        for (const auto& c : cols_)
            if (!c.empty())
                return false;
        return true;
    }

    Column apply(const Column& x) const
    {
        SparseAccumulator<K> acc(field_, rows());
        for (const auto& e : x)
            acc.add_scaled(e.value, cols_.at(e.index));
        return acc.extract();
    }

    /// Index of the first domain basis vector on which two maps differ.
    std::optional<std::size_t> first_difference(const LinMap& other) const
    {
        require_same_shape(other, "compare");
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (!sparse_equal(field_, cols_[j], other.cols_[j]))
                return j;
        return std::nullopt;
    }

    friend bool operator==(const LinMap& a, const LinMap& b)
    {
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && !a.first_difference(b);
    }

    LinMap transpose() const
    {
        std::vector<std::vector<typename Column::Entry>> rowsv(rows());
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& e : cols_[j])
                rowsv[e.index].push_back({static_cast<Index>(j), e.value});
        LinMap t(field_, codomain_, domain_);
        for (std::size_t i = 0; i < rowsv.size(); ++i)
            t.cols_[i].entries = std::move(rowsv[i]);
        return t;
    }

    LinMap scaled(const V& c) const
    {
        LinMap out(field_, domain_, codomain_);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            out.cols_[j] = sparse_scale(field_, c, cols_[j]);
        return out;
    }

    friend LinMap operator+(const LinMap& a, const LinMap& b) { return a.combine(b, a.field_.one()); }
    friend LinMap operator-(const LinMap& a, const LinMap& b) { return a.combine(b, a.field_.neg(a.field_.one())); }
    LinMap operator-() const { return scaled(field_.neg(field_.one())); }

    /// this + c * other
    LinMap combine(const LinMap& other, const V& c) const
    {
        require_same_shape(other, "add");
        LinMap out(field_, domain_, codomain_);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            out.cols_[j] = sparse_axpy(field_, cols_[j], c, other.cols_[j]);
        return out;
    }

    /// Same matrix, relabeled spaces of equal dimension.
    LinMap retyped(const VecSpace& domain, const VecSpace& codomain) const
    {
        if (domain.dim() != domain_.dim() || codomain.dim() != codomain_.dim())
            throw ShapeError("retyped: dimension mismatch");
        return LinMap(field_, domain, codomain, cols_);
    }

private:
    void require_same_shape(const LinMap& other, const char* what) const
    {
        if (!(domain_ == other.domain_) || !(codomain_ == other.codomain_))
            throw ShapeError(std::string(what) + ": maps have different domain or codomain (" + domain_.name() +
                             " -> " + codomain_.name() + " vs " + other.domain_.name() + " -> " +
                             other.codomain_.name() + ")");
    }

    K field_;
    VecSpace domain_;
    VecSpace codomain_;
    std::vector<Column> cols_;
};

/// f ∘ g
template <Field K>
LinMap<K> compose(const LinMap<K>& f, const LinMap<K>& g)
{
    if (!(f.domain() == g.codomain()))
        throw ShapeError("compose: domain of outer map (" + f.domain().name() + ") differs from codomain of inner map (" +
                         g.codomain().name() + ")");
    LinMap<K> out(f.field(), g.domain(), f.codomain());
    SparseAccumulator<K> acc(f.field(), f.rows());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        for (const auto& e : g.column(j))
            acc.add_scaled(e.value, f.column(e.index));
        out.set_column(j, acc.extract());
    }
    return out;
}

/// f_1 ∘ f_2 ∘ ... ∘ f_k
template <Field K, typename... Rest>
LinMap<K> compose(const LinMap<K>& f, const LinMap<K>& g, const Rest&... rest)
{
    return compose(f, compose(g, rest...));
}

/// Kronecker product: basis order of both sides is lexicographic with f's factor most significant.
template <Field K>
LinMap<K> tensor(const LinMap<K>& f, const LinMap<K>& g)
{
    const K& field = f.field();
    LinMap<K> out(field, tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()));
    const std::size_t gd = g.cols(), gc = g.rows();
    for (std::size_t a = 0; a < f.cols(); ++a) {
        for (std::size_t b = 0; b < gd; ++b) {
            typename LinMap<K>::Column col;
            col.entries.reserve(f.column(a).size() * g.column(b).size());
            for (const auto& ef : f.column(a))
                for (const auto& eg : g.column(b))
                    col.entries.push_back({static_cast<Index>(ef.index * gc + eg.index), field.mul(ef.value, eg.value)});
            out.set_column(a * gd + b, std::move(col));
        }
    }
    return out;
}

template <Field K, typename... Rest>
LinMap<K> tensor(const LinMap<K>& f, const LinMap<K>& g, const Rest&... rest)
{
    return tensor(f, tensor(g, rest...));
}

/// f^e for an endomorphism, e ≥ 0.
template <Field K>
LinMap<K> power(const LinMap<K>& f, std::size_t e)
{
    if (!(f.domain() == f.codomain()))
        throw ShapeError("power of a non-endomorphism");
    LinMap<K> result = LinMap<K>::identity(f.field(), f.domain());
    LinMap<K> base = f;
    while (e) {
        if (e & 1)
            result = compose(result, base);
        e >>= 1;
        if (e)
            base = compose(base, base);
    }
    return result;
}

/// Swap map A⊗B → B⊗A.
template <Field K>
LinMap<K> swap_map(const K& field, const VecSpace& a, const VecSpace& b)
{
    LinMap<K> out(field, tensor(a, b), tensor(b, a));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) {
            typename LinMap<K>::Column col;
            col.entries.push_back({static_cast<Index>(j * a.dim() + i), field.one()});
            out.set_column(i * b.dim() + j, std::move(col));
        }
    return out;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_LIN_MAP_HPP
