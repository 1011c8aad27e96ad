/**
 * Sparse Gaussian elimination.
 *
 * `Eliminator` keeps an echelon basis built incrementally.  Stored rows are
 * normalized (pivot entry 1) and each row vanishes on the pivots of all rows
 * inserted before it, so reducing a vector means sweeping the stored rows in
 * insertion order; a heap keyed on insertion order visits only rows whose
 * pivot actually occurs.
 *
 * Two pivot policies: `leading` (smallest index, needed for canonical row
 * echelon forms) and `markowitz` (the entry whose column is least populated
 * in the input, which keeps fill low when only the rank matters).
 */
#ifndef HOPFCYC_ELIMINATION_HPP
#define HOPFCYC_ELIMINATION_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <tuple>
#include <queue>
#include <vector>

#include "hopfcyc/lin_map.hpp"
#include "hopfcyc/sparse_vector.hpp"

namespace hopfcyc {

enum class PivotPolicy { leading, markowitz };

template <Field K>
class Eliminator
{
public:
    using V = typename K::value_type;
    using Vec = SparseVec<V>;

    struct Row
    {
        Index pivot;
        Vec vec;
    };

    Eliminator(const K& field, std::size_t dim, PivotPolicy policy = PivotPolicy::leading,
               std::vector<std::size_t> column_weight = {})
        : field_(field), dim_(dim), policy_(policy), weight_(std::move(column_weight)),
          row_of_(dim, -1), values_(dim, field.zero()), touched_(dim, 0)
    {
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Row>& rows() const { return rows_; }

    /// Row id whose pivot sits at `index`, or -1.
    long row_with_pivot(Index index) const { return row_of_[index]; }

    /// Reduce v modulo the stored rows.  The result vanishes on every pivot.
    Vec reduce(const Vec& v)
    {
        load(v);
        sweep();
        return unload();
    }

    /// Insert v; returns true when v was independent of the stored rows.
    bool insert(const Vec& v)
    {
        load(v);
        sweep();
        Vec r = unload();
        if (r.empty())
            return false;
        std::size_t pos = choose_pivot(r);
        V scale = field_.inv(r.entries[pos].value);
        Index pivot = r.entries[pos].index;
        if (!field_.is_one(scale))
            r = sparse_scale(field_, scale, r);
        row_of_[pivot] = static_cast<long>(rows_.size());
        rows_.push_back({pivot, std::move(r)});
        return true;
    }

    /**
     * Reduced row echelon form of the stored span, rows sorted by pivot.
     * Requires the leading policy (rows then start at their pivot).
     */
    std::vector<Vec> reduced_rows() const
    {
        std::vector<std::size_t> order(rows_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].pivot < rows_[b].pivot; });
        std::vector<Vec> out(rows_.size());
        std::vector<long> slot_of_pivot(dim_, -1);
        for (std::size_t k = 0; k < order.size(); ++k)
            slot_of_pivot[rows_[order[k]].pivot] = static_cast<long>(k);
        SparseAccumulator<K> acc(field_, dim_);
        // Back-substitute from the last pivot upwards: each finished row has
        // zeros at every other pivot, so one ascending pass suffices.
        for (std::size_t k = order.size(); k-- > 0;) {
            const Vec& row = rows_[order[k]].vec;
            bool clean = true;
            for (const auto& e : row)
                if (e.index != rows_[order[k]].pivot && slot_of_pivot[e.index] >= 0) {
                    clean = false;
                    break;
                }
            if (clean) {
                out[k] = row;
                continue;
            }
            acc.add_scaled(field_.one(), row);
            for (const auto& e : row) {
                long s = slot_of_pivot[e.index];
                if (s >= 0 && static_cast<std::size_t>(s) != k)
                    acc.add_scaled(field_.neg(e.value), out[static_cast<std::size_t>(s)]);
            }
            out[k] = acc.extract();
        }
        return out;
    }

private:
    void load(const Vec& v)
    {
        for (const auto& e : v) {
            touch(e.index);
            values_[e.index] = e.value;
            if (row_of_[e.index] >= 0)
                heap_.push(row_of_[e.index]);
        }
    }

    void touch(Index i)
    {
        if (!touched_[i]) {
            touched_[i] = 1;
            list_.push_back(i);
        }
    }

    void sweep()
    {
        long last = -1;
        while (!heap_.empty()) {
            long k = heap_.top();
            heap_.pop();
            if (k == last)
                continue;
            last = k;
            const Row& row = rows_[static_cast<std::size_t>(k)];
            V c = values_[row.pivot];
            if (field_.is_zero(c))
                continue;
            V minus_c = field_.neg(c);
            for (const auto& e : row.vec) {
                touch(e.index);
                field_.axpy_in_place(values_[e.index], minus_c, e.value);
                long r = row_of_[e.index];
                if (r > k)
                    heap_.push(r);
            }
        }
    }

    Vec unload()
    {
        std::sort(list_.begin(), list_.end());
        Vec out;
        for (Index i : list_) {
            if (!field_.is_zero(values_[i]))
                out.entries.push_back({i, values_[i]});
            values_[i] = field_.zero();
            touched_[i] = 0;
        }
        list_.clear();
        return out;
    }

    std::size_t choose_pivot(const Vec& r) const
    {
        if (policy_ == PivotPolicy::leading || weight_.empty())
            return 0;
        std::size_t best = 0;
        for (std::size_t i = 1; i < r.size(); ++i)
            if (weight_[r.entries[i].index] < weight_[r.entries[best].index])
                best = i;
        return best;
    }

    K field_;
    std::size_t dim_;
    PivotPolicy policy_;
    std::vector<std::size_t> weight_;
    std::vector<Row> rows_;
    std::vector<long> row_of_;
    std::vector<V> values_;
    std::vector<char> touched_;
    std::vector<Index> list_;
    std::priority_queue<long, std::vector<long>, std::greater<long>> heap_;
};

/// Rank of a linear map, by Markowitz-weighted elimination of its columns.
template <Field K>
std::size_t rank(const LinMap<K>& f)
{
    std::vector<std::size_t> weight(f.rows(), 0);
    for (const auto& c : f.columns())
        for (const auto& e : c)
            ++weight[e.index];
    std::vector<std::size_t> order(f.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return f.column(a).size() < f.column(b).size(); });
    Eliminator<K> elim(f.field(), f.rows(), PivotPolicy::markowitz, std::move(weight));
    for (std::size_t j : order) {
        if (elim.rank() == f.rows())
            break;
        elim.insert(f.column(j));
    }
    return elim.rank();
}

/**
 * Inverse of a square map by reducing the rows of [F | I]; nullopt when F is
 * singular.  The result maps codomain(F) back to domain(F).
 */
template <Field K>
std::optional<LinMap<K>> inverse(const LinMap<K>& f)
{
    const std::size_t n = f.cols();
    if (f.rows() != n)
        return std::nullopt;
    const K& field = f.field();
    LinMap<K> rows = f.transpose();
    Eliminator<K> elim(field, 2 * n, PivotPolicy::leading);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec<typename K::value_type> r = rows.column(i);
        r.entries.push_back({static_cast<Index>(n + i), field.one()});
        elim.insert(r);
    }
    auto reduced = elim.reduced_rows();
    if (reduced.size() != n || reduced.back().leading() >= n)
        return std::nullopt;
    // Row k of [I | F⁻¹] holds row k of F⁻¹ in its second block.
    std::vector<std::tuple<std::size_t, std::size_t, typename K::value_type>> t;
    for (std::size_t k = 0; k < n; ++k)
        for (const auto& e : reduced[k])
            if (e.index >= n)
                t.emplace_back(k, e.index - n, e.value);
    return LinMap<K>::from_triplets(field, f.codomain(), f.domain(), t);
}

}  // namespace hopfcyc

#endif  // HOPFCYC_ELIMINATION_HPP
