#ifndef HOPFCYC_SPARSE_VECTOR_HPP
#define HOPFCYC_SPARSE_VECTOR_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hopfcyc/field.hpp"
#include "hopfcyc/vec_space.hpp"

namespace hopfcyc {

/// Sorted coordinate list; indices strictly increasing, no stored zeros.
template <typename V>
struct SparseVec
{
    struct Entry
    {
        Index index;
        V value;
    };

    std::vector<Entry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
    auto begin() const { return entries.begin(); }
    auto end() const { return entries.end(); }

    /// Pointer to the stored value at `index`, or nullptr.
    const V* find(Index index) const
    {
        auto it = std::lower_bound(entries.begin(), entries.end(), index,
                                   [](const Entry& e, Index i) { return e.index < i; });
        return it != entries.end() && it->index == index ? &it->value : nullptr;
    }

    Index leading() const { return entries.front().index; }
};

template <typename K>
bool sparse_equal(const K& field, const SparseVec<typename K::value_type>& a, const SparseVec<typename K::value_type>& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.entries[i].index != b.entries[i].index || !field.equal(a.entries[i].value, b.entries[i].value))
            return false;
    return true;
}

/// a + c*b
template <typename K>
SparseVec<typename K::value_type> sparse_axpy(const K& field, const SparseVec<typename K::value_type>& a,
                                              const typename K::value_type& c,
                                              const SparseVec<typename K::value_type>& b)
{
    using V = typename K::value_type;
    SparseVec<V> out;
    out.entries.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a.entries[i].index < b.entries[j].index)) {
            out.entries.push_back(a.entries[i++]);
        } else if (i == a.size() || b.entries[j].index < a.entries[i].index) {
            V v = field.mul(c, b.entries[j].value);
            if (!field.is_zero(v))
                out.entries.push_back({b.entries[j].index, std::move(v)});
            ++j;
        } else {
            V v = a.entries[i].value;
            field.axpy_in_place(v, c, b.entries[j].value);
            if (!field.is_zero(v))
                out.entries.push_back({a.entries[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <typename K>
SparseVec<typename K::value_type> sparse_scale(const K& field, const typename K::value_type& c,
                                               const SparseVec<typename K::value_type>& a)
{
    SparseVec<typename K::value_type> out;
    if (field.is_zero(c))
        return out;
    out.entries.reserve(a.size());
    for (const auto& e : a)
        out.entries.push_back({e.index, field.mul(c, e.value)});
    return out;
}

/**
 * Dense scratch buffer for accumulating sparse linear combinations.
 * Reusable: `extract` returns the sorted result and clears the buffer.
 */
template <typename K>
class SparseAccumulator
{
public:
    using V = typename K::value_type;

    SparseAccumulator(const K& field, std::size_t dim)
        : field_(field), values_(dim, field.zero()), touched_(dim, 0)
    {
    }

    void add(Index i, const V& c, const V& v)
    {
        if (!touched_[i]) {
            touched_[i] = 1;
            list_.push_back(i);
        }
        field_.axpy_in_place(values_[i], c, v);
    }

    void add(Index i, const V& v)
    {
        if (!touched_[i]) {
            touched_[i] = 1;
            list_.push_back(i);
        }
        values_[i] = field_.add(values_[i], v);
    }

    void add_scaled(const V& c, const SparseVec<V>& x)
    {
        for (const auto& e : x)
            add(e.index, c, e.value);
    }

    SparseVec<V> extract()
    {
        std::sort(list_.begin(), list_.end());
        SparseVec<V> out;
        out.entries.reserve(list_.size());
        for (Index i : list_) {
            if (!field_.is_zero(values_[i]))
                out.entries.push_back({i, values_[i]});
            values_[i] = field_.zero();
            touched_[i] = 0;
        }
        list_.clear();
        return out;
    }

private:
    K field_;
    std::vector<V> values_;
    std::vector<char> touched_;
    std::vector<Index> list_;
};

}  // namespace hopfcyc

#endif  // HOPFCYC_SPARSE_VECTOR_HPP
