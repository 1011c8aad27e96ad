/**
 * Grouplike elements of a small Hopf algebra.
 *
 * Write g = Σ λ_i e_i and L_i = (id ⊗ e_i*)∘Δ.  Then Δg = g⊗g says exactly
 * that L_i g = λ_i g for every i, so g lies in the joint eigenspace of the
 * L_i with eigenvalues equal to its own coordinates.  The search branches on
 * the eigenvalues of each L_i lying in k (roots of its characteristic
 * polynomial), prunes branches whose joint eigenspace vanishes, and tests the
 * coordinate vector λ at each leaf.
 */
#ifndef HOPFCYC_HOPF_GROUPLIKES_HPP
#define HOPFCYC_HOPF_GROUPLIKES_HPP

#include <algorithm>
#include <cstddef>
#include <tuple>
#include <type_traits>
#include <vector>

#include "hopfcyc/hopf/hopf_algebra.hpp"

namespace hopfcyc {

template <Field K>
using DenseMatrix = std::vector<std::vector<typename K::value_type>>;

/// Characteristic polynomial det(x·I − A), coefficients from degree 0 upward.
template <Field K>
std::vector<typename K::value_type> characteristic_polynomial(const K& f, DenseMatrix<K> a)
{
    using V = typename K::value_type;
    const std::size_t n = a.size();
    // Similarity transform to upper Hessenberg form.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && f.is_zero(a[i][m - 1]))
            ++i;
        if (i == n)
            continue;
        if (i != m) {
            std::swap(a[i], a[m]);
            for (auto& row : a)
                std::swap(row[i], row[m]);
        }
        V piv_inv = f.inv(a[m][m - 1]);
        for (std::size_t j = m + 1; j < n; ++j) {
            V u = f.mul(a[j][m - 1], piv_inv);
            if (f.is_zero(u))
                continue;
            for (std::size_t c = 0; c < n; ++c)
                a[j][c] = f.sub(a[j][c], f.mul(u, a[m][c]));
            for (std::size_t r = 0; r < n; ++r)
                a[r][m] = f.add(a[r][m], f.mul(u, a[r][j]));
        }
    }
    // p_m = (x − a_mm) p_{m−1} − Σ_{i<m} a_im (Π_{i<j≤m} a_{j,j−1}) p_{i−1}, 1-based.
    std::vector<std::vector<V>> p(n + 1);
    p[0] = {f.one()};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<V> next(m + 1, f.zero());
        for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
            next[d + 1] = f.add(next[d + 1], p[m - 1][d]);
            next[d] = f.sub(next[d], f.mul(a[m - 1][m - 1], p[m - 1][d]));
        }
        V prod = f.one();
        for (std::size_t i = m - 1; i >= 1; --i) {
            prod = f.mul(prod, a[i][i - 1]);
            V c = f.mul(a[i - 1][m - 1], prod);
            if (!f.is_zero(c))
                for (std::size_t d = 0; d < p[i - 1].size(); ++d)
                    next[d] = f.sub(next[d], f.mul(c, p[i - 1][d]));
        }
        p[m] = std::move(next);
    }
    return p[n];
}

namespace detail {

template <Field K>
typename K::value_type evaluate(const K& f, const std::vector<typename K::value_type>& poly,
                                const typename K::value_type& x)
{
    auto acc = f.zero();
    for (std::size_t d = poly.size(); d-- > 0;)
        acc = f.add(f.mul(acc, x), poly[d]);
    return acc;
}

inline std::vector<mpz_class> positive_divisors(mpz_class n)
{
    if (n < 0)
        n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace detail

/// Distinct roots in k of a polynomial (coefficients from degree 0 upward).
template <Field K>
std::vector<typename K::value_type> roots_in_field(const K& f, std::vector<typename K::value_type> poly)
{
    using V = typename K::value_type;
    while (!poly.empty() && f.is_zero(poly.back()))
        poly.pop_back();
    std::vector<V> roots;
    if (poly.size() <= 1)
        return roots;
    if constexpr (std::is_same_v<K, PrimeField>) {
        const std::uint32_t p = f.characteristic();
        if (p > (1u << 16))
            throw PreconditionError("root search over GF(p) is limited to p ≤ 65536");
        for (std::uint32_t x = 0; x < p; ++x)
            if (f.is_zero(detail::evaluate(f, poly, x)))
                roots.push_back(x);
    } else {
        // Rational root theorem on the primitive integer multiple of poly.
        mpz_class l = 1;
        for (const auto& c : poly)
            l = lcm(l, mpz_class(c.get_den()));
        std::vector<mpz_class> ints;
        for (const auto& c : poly)
            ints.push_back(mpz_class(c * l));
        std::size_t low = 0;
        while (ints[low] == 0)
            ++low;
        if (low > 0)
            roots.push_back(f.zero());
        if (low + 1 < ints.size()) {
            for (const auto& num : detail::positive_divisors(ints[low]))
                for (const auto& den : detail::positive_divisors(ints.back()))
                    for (int sign : {1, -1}) {
                        V x = f.from_fraction(sign * num, den);
                        if (f.is_zero(detail::evaluate(f, poly, x)) &&
                            std::find(roots.begin(), roots.end(), x) == roots.end())
                            roots.push_back(x);
                    }
        }
    }
    return roots;
}

/// All grouplike elements; supported for dim H ≤ 8.
template <Field K>
std::vector<SparseVec<typename K::value_type>> grouplikes(const HopfAlgebra<K>& h)
{
    using V = typename K::value_type;
    const std::size_t n = h.dim();
    if (n > 8)
        throw PreconditionError("grouplike search is limited to dimension 8");
    const K& f = h.field;
    std::vector<LinMap<K>> ops;
    std::vector<std::vector<V>> eigen;
    for (std::size_t i = 0; i < n; ++i) {
        DenseMatrix<K> m(n, std::vector<V>(n, f.zero()));
        std::vector<std::tuple<std::size_t, std::size_t, V>> t;
        for (std::size_t b = 0; b < n; ++b)
            for (const auto& e : h.comult.column(b))
                if (e.index % n == i) {
                    m[e.index / n][b] = e.value;
                    t.emplace_back(e.index / n, b, e.value);
                }
        ops.push_back(LinMap<K>::from_triplets(f, h.space, h.space, t));
        eigen.push_back(roots_in_field(f, characteristic_polynomial(f, m)));
    }
    std::vector<SparseVec<V>> found;
    std::vector<V> lambda(n, f.zero());
    auto search = [&](auto&& self, std::size_t i, const Subspace<K>& e) -> void {
        if (i == n) {
            SparseVec<V> g;
            for (std::size_t k = 0; k < n; ++k)
                if (!f.is_zero(lambda[k]))
                    g.entries.push_back({static_cast<Index>(k), lambda[k]});
            if (e.contains(g) && is_grouplike(h, g))
                found.push_back(std::move(g));
            return;
        }
        for (const auto& ev : eigen[i]) {
            auto shifted = ops[i] - LinMap<K>::identity(f, h.space).scaled(ev);
            Subspace<K> next = intersect(e, kernel(shifted));
            if (next.dim() == 0)
                continue;
            lambda[i] = ev;
            self(self, i + 1, next);
        }
    };
    search(search, 0, Subspace<K>::full(f, h.space));
    return found;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOPF_GROUPLIKES_HPP
