/**
 * Hochschild and cyclic homology dimensions of a realized (para-)cyclic
 * module, and group homology with trivial coefficients as an oracle.
 *
 * Signs live here only: b = Σ(−1)^j d_j, b′ = Σ_{j<n}(−1)^j d_j,
 * λ = (−1)^n t_n, N = Σ_{i≤n} λ^i.  HC is the homology of the total complex
 * of the cyclic bicomplex: column p holds C_q in row q, with vertical map b
 * for even p and −b′ for odd p, and horizontal maps 1−λ (odd → even) and
 * N (even → odd).  D² = 0 needs b(1−λ) = (1−λ)b′ and b′N = Nb.
 *
 * HC_n and HH_n only involve levels ≤ n+1, so a realization truncated at N
 * yields degrees ≤ N−1.
 */
#ifndef HOPFCYC_HOMOLOGY_HPP
#define HOPFCYC_HOMOLOGY_HPP

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "hopfcyc/complexes/realization.hpp"
#include "hopfcyc/hopf/group_algebra.hpp"

namespace hopfcyc {

enum class Theory { hh, hc };

inline std::string to_string(Theory t) { return t == Theory::hh ? "HH" : "HC"; }

struct HomologyResult
{
    Theory theory = Theory::hh;
    std::vector<std::size_t> dims;  // indexed by degree
    FieldSpec field;
    CheckReport report;  // d² = 0 and bicomplex commutation checks
};

namespace detail {

template <Field K>
void require_levels(const ParaCyclicRealization<K>& r, std::size_t n_max, const char* what)
{
    if (r.levels.size() < n_max + 2)
        throw PreconditionError(std::string(what) + ": degree " + std::to_string(n_max) + " needs levels 0.." +
                                std::to_string(n_max + 1) + " but '" + r.name + "' stops at " +
                                std::to_string(r.top()));
}

template <Field K>
LinMap<K> alternating_faces(const ParaCyclicRealization<K>& r, std::size_t n, std::size_t count)
{
    const auto& lv = r.levels[n];
    LinMap<K> out = LinMap<K>::zero(r.field, lv.space, r.levels[n - 1].space);
    for (std::size_t j = 0; j < count; ++j)
        out = j % 2 ? out - lv.faces[j] : out + lv.faces[j];
    return out;
}

/// b on C_n; the zero map C_0 → 0 at n = 0.
template <Field K>
LinMap<K> hochschild_b(const ParaCyclicRealization<K>& r, std::size_t n)
{
    return alternating_faces(r, n, n + 1);
}

template <Field K>
LinMap<K> bar_b_prime(const ParaCyclicRealization<K>& r, std::size_t n)
{
    return alternating_faces(r, n, n);
}

template <Field K>
LinMap<K> signed_cyclic(const ParaCyclicRealization<K>& r, std::size_t n)
{
    const auto& t = *r.levels[n].cyclic;
    return n % 2 ? -t : t;
}

template <Field K>
LinMap<K> norm_operator(const ParaCyclicRealization<K>& r, std::size_t n)
{
    auto lambda = signed_cyclic(r, n);
    auto acc = LinMap<K>::identity(r.field, r.levels[n].space);
    auto power = acc;
    for (std::size_t i = 1; i <= n; ++i) {
        power = compose(lambda, power);
        acc = acc + power;
    }
    return acc;
}

/// dim C_n − rank ∂_n − rank ∂_{n+1}, where ∂_m : C_m → C_{m−1} and ∂_0 = 0.
inline std::vector<std::size_t> betti(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& ranks,
                                      std::size_t n_max)
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= n_max; ++n)
        out.push_back(dims[n] - ranks[n] - ranks[n + 1]);
    return out;
}

}  // namespace detail

/// HH_0..HH_{n_max}; needs levels up to n_max+1.
template <Field K>
HomologyResult hochschild_homology(const ParaCyclicRealization<K>& r, std::size_t n_max)
{
    detail::require_levels(r, n_max, "hochschild_homology");
    HomologyResult out{Theory::hh, {}, r.field.spec(), {}};
    std::vector<LinMap<K>> b;
    std::vector<std::size_t> dims, ranks{0};
    for (std::size_t n = 0; n <= n_max + 1; ++n) {
        dims.push_back(r.levels[n].space.dim());
        if (n >= 1) {
            b.push_back(detail::hochschild_b(r, n));
            ranks.push_back(rank(b.back()));
        }
    }
    for (std::size_t n = 2; n <= n_max + 1; ++n)
        out.report.expect_zero("b b = 0" + detail::at(n), compose(b[n - 2], b[n - 1]));
    out.dims = detail::betti(dims, ranks, n_max);
    return out;
}

/**
 * HC_0..HC_{n_max} from the total complex of the cyclic bicomplex.  Needs
 * levels up to n_max+1 carrying t with t^{n+1} = id; throws otherwise.
 */
template <Field K>
HomologyResult cyclic_homology(const ParaCyclicRealization<K>& r, std::size_t n_max)
{
    using V = typename K::value_type;
    detail::require_levels(r, n_max, "cyclic_homology");
    const K& f = r.field;
    const std::size_t top = n_max + 1;
    for (std::size_t n = 0; n <= top; ++n) {
        const auto& lv = r.levels[n];
        if (!lv.cyclic)
            throw PreconditionError("cyclic_homology: '" + r.name + "' has no cyclic operator" + detail::at(n));
        if (!(power(*lv.cyclic, n + 1) == LinMap<K>::identity(f, lv.space)))
            throw PreconditionError("cyclic_homology: t^(n+1) != id on '" + r.name + "'" + detail::at(n));
    }
    HomologyResult out{Theory::hc, {}, f.spec(), {}};

    std::vector<LinMap<K>> b, bp, one_minus_lambda, norm;
    for (std::size_t n = 0; n <= top; ++n) {
        const auto id = LinMap<K>::identity(f, r.levels[n].space);
        one_minus_lambda.push_back(id - detail::signed_cyclic(r, n));
        norm.push_back(detail::norm_operator(r, n));
        if (n >= 1) {
            b.push_back(detail::hochschild_b(r, n));
            bp.push_back(detail::bar_b_prime(r, n));
        }
    }
    // b[n-1] and bp[n-1] act on level n.
    for (std::size_t n = 1; n <= top; ++n) {
        out.report.expect_equal("b (1 - lambda) = (1 - lambda) b'" + detail::at(n), compose(b[n - 1], one_minus_lambda[n]),
                                compose(one_minus_lambda[n - 1], bp[n - 1]));
        out.report.expect_equal("b' N = N b" + detail::at(n), compose(bp[n - 1], norm[n]), compose(norm[n - 1], b[n - 1]));
    }

    // Tot_m = ⊕_{p+q=m} C_q, blocks ordered by p.
    auto tot_space = [&](std::size_t m) {
        std::vector<std::string> labels;
        for (std::size_t p = 0; p <= m; ++p) {
            const auto& s = r.levels[m - p].space;
            for (std::size_t i = 0; i < s.dim(); ++i)
                labels.push_back("(" + std::to_string(p) + ") " + s.label(i));
        }
        return VecSpace::primitive("Tot_" + std::to_string(m), std::move(labels));
    };
    auto offsets = [&](std::size_t m) {
        std::vector<std::size_t> off{0};
        for (std::size_t p = 0; p <= m; ++p)
            off.push_back(off.back() + r.levels[m - p].space.dim());
        return off;
    };
    std::vector<VecSpace> tot;
    for (std::size_t m = 0; m <= top; ++m)
        tot.push_back(tot_space(m));
    std::vector<LinMap<K>> D;  // D[m-1] : Tot_m → Tot_{m−1}
    for (std::size_t m = 1; m <= top; ++m) {
        const auto from = offsets(m), to = offsets(m - 1);
        std::vector<std::tuple<std::size_t, std::size_t, V>> trip;
        auto place = [&](const LinMap<K>& block, std::size_t row0, std::size_t col0) {
            for (std::size_t c = 0; c < block.cols(); ++c)
                for (const auto& e : block.column(c))
                    trip.emplace_back(row0 + e.index, col0 + c, e.value);
        };
        for (std::size_t p = 0; p <= m; ++p) {
            const std::size_t q = m - p;
            if (q >= 1) {
                // vertical: (p,q) → (p,q−1)
                const auto& v = p % 2 ? -bp[q - 1] : b[q - 1];
                place(v, to[p], from[p]);
            }
            if (p >= 1) {
                // horizontal: (p,q) → (p−1,q)
                place(p % 2 ? one_minus_lambda[q] : norm[q], to[p - 1], from[p]);
            }
        }
        D.push_back(LinMap<K>::from_triplets(f, tot[m], tot[m - 1], trip));
    }
    for (std::size_t m = 2; m <= top; ++m)
        out.report.expect_zero("D D = 0" + detail::at(m), compose(D[m - 2], D[m - 1]));
    std::vector<std::size_t> dims, ranks{0};
    for (std::size_t m = 0; m <= top; ++m)
        dims.push_back(tot[m].dim());
    for (const auto& d : D)
        ranks.push_back(rank(d));
    out.dims = detail::betti(dims, ranks, n_max);
    return out;
}

/**
 * dim H_n(G; k) with trivial coefficients for n ≤ n_max, from the
 * normalized inhomogeneous bar complex built on the Cayley table:
 * d(g_1|…|g_n) = (g_2|…|g_n) + Σ(−1)^i(…|g_ig_{i+1}|…) + (−1)^n(g_1|…|g_{n−1}),
 * with cells containing the identity set to zero.
 */
template <Field K>
std::vector<std::size_t> group_homology_oracle(const CayleyTable& g, const K& f, std::size_t n_max)
{
    const auto data = validate_group(g);
    std::vector<std::size_t> elems;  // non-identity elements
    for (std::size_t a = 0; a < g.order(); ++a)
        if (a != data.identity)
            elems.push_back(a);
    const std::size_t m = elems.size();
    std::vector<long> slot(g.order(), -1);
    for (std::size_t i = 0; i < m; ++i)
        slot[elems[i]] = static_cast<long>(i);

    std::vector<std::size_t> dims{1};
    for (std::size_t n = 1; n <= n_max + 1; ++n)
        dims.push_back(dims.back() * m);
    std::vector<std::size_t> ranks{0};
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        LinMap<K> d(f, VecSpace::numbered("B", dims[n]), VecSpace::numbered("B", dims[n - 1]));
        std::vector<std::size_t> cell(n);
        for (std::size_t col = 0; col < dims[n]; ++col) {
            std::size_t rest = col;
            for (std::size_t k = n; k-- > 0;) {
                cell[k] = elems[rest % m];
                rest /= m;
            }
            SparseAccumulator<K> acc(f, dims[n - 1]);
            auto emit = [&](const std::vector<std::size_t>& face, bool negative) {
                std::size_t idx = 0;
                for (auto a : face) {
                    if (slot[a] < 0)
                        return;
                    idx = idx * m + static_cast<std::size_t>(slot[a]);
                }
                acc.add(static_cast<Index>(idx), negative ? f.neg(f.one()) : f.one());
            };
            emit(std::vector<std::size_t>(cell.begin() + 1, cell.end()), false);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                std::vector<std::size_t> face;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i) {
                        face.push_back(g.mul(cell[i], cell[i + 1]));
                        ++k;
                    } else {
                        face.push_back(cell[k]);
                    }
                }
                emit(face, (i + 1) % 2 == 1);
            }
            emit(std::vector<std::size_t>(cell.begin(), cell.end() - 1), n % 2 == 1);
            d.set_column(col, acc.extract());
        }
        ranks.push_back(rank(d));
    }
    return detail::betti(dims, ranks, n_max);
}

/// Σ_{i≥0} h_{n−2i}, the cyclic homology of k[G] on the conjugacy class of 1.
inline std::vector<std::size_t> cyclic_from_group_homology(const std::vector<std::size_t>& h)
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < h.size(); ++n) {
        std::size_t s = 0;
        for (std::size_t k = n % 2; k <= n; k += 2)
            s += h[k];
        out.push_back(s);
    }
    return out;
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOMOLOGY_HPP
