#include <catch_amalgamated.hpp>

#include <random>

#include "hopfcyc/exactla.hpp"

using namespace hopfcyc;

namespace {

template <Field K>
SparseVec<typename K::value_type> vec(const K& f, std::initializer_list<long> xs)
{
    SparseVec<typename K::value_type> v;
    Index i = 0;
    for (long x : xs) {
        if (x != 0 && !f.is_zero(f.from_int(x)))
            v.entries.push_back({i, f.from_int(x)});
        ++i;
    }
    return v;
}

template <Field K>
LinMap<K> random_map(const K& f, std::mt19937& rng, std::size_t rows, std::size_t cols, double density)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<long> val(-3, 3);
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
    for (auto& r : m)
        for (auto& x : r)
            if (u(rng) < density)
                x = val(rng);
    return LinMap<K>::from_rows(f, VecSpace::numbered("D", cols), VecSpace::numbered("C", rows), m);
}

template <Field K>
Subspace<K> random_subspace(const K& f, std::mt19937& rng, const VecSpace& amb, std::size_t gens)
{
    std::uniform_int_distribution<long> val(-2, 2);
    std::vector<SparseVec<typename K::value_type>> vs;
    SparseAccumulator<K> acc(f, amb.dim());
    for (std::size_t g = 0; g < gens; ++g) {
        for (std::size_t i = 0; i < amb.dim(); ++i)
            if (long x = val(rng))
                acc.add(static_cast<Index>(i), f.from_int(x));
        vs.push_back(acc.extract());
    }
    return Subspace<K>::span(f, amb, vs);
}

}  // namespace

TEST_CASE("field arithmetic", "[exactla]")
{
    Rationals q;
    CHECK(q.to_string(parse_scalar(q, "6/4")) == "3/2");
    CHECK_THROWS_AS(parse_scalar(q, "1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_scalar(q, "x"), ParseError);
    PrimeField f5(5);
    CHECK(f5.mul(f5.inv(3), 3) == 1);
    CHECK(parse_scalar(f5, "1/2") == 3);
    CHECK(f5.from_int(-1) == 4);
    CHECK_THROWS_AS(PrimeField(4), PreconditionError);
}

TEST_CASE("tensor spaces use lexicographic order with the left factor most significant", "[exactla]")
{
    auto a = VecSpace::primitive("A", {"a0", "a1"});
    auto b = VecSpace::primitive("B", {"b0", "b1", "b2"});
    auto ab = tensor(a, b);
    CHECK(ab.dim() == 6);
    CHECK(ab.label(4) == "a1⊗b1");
    CHECK(ab.compose({1, 2}) == 5);
    CHECK(tensor(tensor(a, b), a) == tensor(a, tensor(b, a)));
    CHECK(tensor_power(a, 0).dim() == 1);
    CHECK_THROWS_AS(VecSpace::primitive("X", {"u", "u"}), PreconditionError);
}

TEST_CASE("kernel", "[exactla]")
{
    Rationals q;
    auto v3 = VecSpace::numbered("V", 3);
    CHECK(kernel(LinMap<Rationals>::identity(q, v3)).dim() == 0);
    CHECK(kernel(LinMap<Rationals>::zero(q, v3, v3)).dim() == 3);

    PrimeField f2(2);
    auto v2 = VecSpace::numbered("V", 2);
    auto f = LinMap<PrimeField>::from_rows(f2, v2, v2, {{1, 1}, {1, 1}});
    auto k = kernel(f);
    REQUIRE(k.dim() == 1);
    CHECK(sparse_equal(f2, k.basis()[0], vec(f2, {1, 1})));
}

TEST_CASE("image", "[exactla]")
{
    Rationals q;
    auto v2 = VecSpace::numbered("V", 2);
    CHECK(image(LinMap<Rationals>::identity(q, v2)).dim() == 2);
    CHECK(image(LinMap<Rationals>::zero(q, v2, v2)).dim() == 0);
    auto im = image(LinMap<Rationals>::from_rows(q, v2, v2, {{1, 2}, {2, 4}}));
    REQUIRE(im.dim() == 1);
    CHECK(sparse_equal(q, im.basis()[0], vec(q, {1, 2})));
}

TEST_CASE("intersect", "[exactla]")
{
    Rationals q;
    auto v3 = VecSpace::numbered("V", 3);
    auto a = Subspace<Rationals>::span(q, v3, {vec(q, {1, 0, 0}), vec(q, {0, 1, 0})});
    auto b = Subspace<Rationals>::span(q, v3, {vec(q, {0, 1, 0}), vec(q, {0, 0, 1})});
    auto c = intersect(a, b);
    REQUIRE(c.dim() == 1);
    CHECK(sparse_equal(q, c.basis()[0], vec(q, {0, 1, 0})));
    CHECK(intersect(Subspace<Rationals>::full(q, v3), b) == b);

    auto v2 = VecSpace::numbered("V", 2);
    auto l1 = Subspace<Rationals>::span(q, v2, {vec(q, {1, 1})});
    auto l2 = Subspace<Rationals>::span(q, v2, {vec(q, {1, -1})});
    CHECK(intersect(l1, l2).dim() == 0);
    CHECK_THROWS_AS(intersect(a, l1), ShapeError);
}

TEST_CASE("quotient", "[exactla]")
{
    Rationals q;
    auto v3 = VecSpace::numbered("V", 3);
    auto w = Subspace<Rationals>::span(q, v3, {vec(q, {1, 1, 0})});
    auto [space, proj, rel, reps] = quotient(v3, w);
    CHECK(space.dim() == 2);
    CHECK(proj.apply(vec(q, {1, 1, 0})).empty());
    CHECK(kernel(proj) == w);

    auto zero = quotient(v3, Subspace<Rationals>::zero(q, v3));
    CHECK(zero.projection.retyped(v3, v3) == LinMap<Rationals>::identity(q, v3));
    CHECK(quotient(v3, Subspace<Rationals>::full(q, v3)).space.dim() == 0);
    CHECK_THROWS_AS(quotient(VecSpace::numbered("V", 2), w), ShapeError);
}

TEST_CASE("tensor and compose", "[exactla]")
{
    Rationals q;
    auto v2 = VecSpace::numbered("A", 2), v3 = VecSpace::numbered("B", 3);
    CHECK(tensor(LinMap<Rationals>::identity(q, v2), LinMap<Rationals>::identity(q, v3)) ==
          LinMap<Rationals>::identity(q, tensor(v2, v3)));
    auto f = LinMap<Rationals>::from_rows(q, v2, v2, {{1, 2}, {3, 4}});
    CHECK(tensor(f, LinMap<Rationals>::zero(q, v3, v3)).is_zero());
    auto u = VecSpace::unit();
    auto two = LinMap<Rationals>::from_rows(q, u, u, {{2}});
    auto three = LinMap<Rationals>::from_rows(q, u, u, {{3}});
    CHECK(tensor(two, three) == LinMap<Rationals>::from_rows(q, u, u, {{6}}));

    auto g = LinMap<Rationals>::from_rows(q, v2, v2, {{0, 1}, {1, 1}});
    CHECK(compose(f, g) == LinMap<Rationals>::from_rows(q, v2, v2, {{2, 3}, {4, 7}}));
    CHECK(compose(LinMap<Rationals>::identity(q, v2), f) == f);
    auto ginv = LinMap<Rationals>::from_rows(q, v2, v2, {{-1, 1}, {1, 0}});
    CHECK(compose(g, ginv) == LinMap<Rationals>::identity(q, v2));
    CHECK_THROWS_AS(compose(f, LinMap<Rationals>::identity(q, v3)), ShapeError);
}

TEST_CASE("largest bi-invariant subspace", "[exactla]")
{
    Rationals q;
    auto v2 = VecSpace::numbered("V", 2);
    auto id = LinMap<Rationals>::identity(q, v2);
    auto full = Subspace<Rationals>::full(q, v2);
    CHECK(largest_bi_invariant_subspace(full, id, id) == full);
    auto zero = Subspace<Rationals>::zero(q, v2);
    CHECK(largest_bi_invariant_subspace(zero, id, id) == zero);

    auto rot = LinMap<Rationals>::from_rows(q, v2, v2, {{0, -1}, {1, 0}});
    auto rot_inv = LinMap<Rationals>::from_rows(q, v2, v2, {{0, 1}, {-1, 0}});
    auto line = Subspace<Rationals>::span(q, v2, {vec(q, {1, 0})});
    CHECK(largest_bi_invariant_subspace(line, rot, rot_inv).dim() == 0);
    CHECK_THROWS_AS(largest_bi_invariant_subspace(line, rot, rot), PreconditionError);
}

TEMPLATE_TEST_CASE("rank-nullity on random sparse maps", "[exactla][property]", Rationals, PrimeField)
{
    TestType f = [] {
        if constexpr (std::is_same_v<TestType, PrimeField>)
            return PrimeField(7);
        else
            return Rationals{};
    }();
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
        auto m = random_map(f, rng, r, c, 0.3);
        auto k = kernel(m);
        CHECK(k.dim() + rank(m) == c);
        CHECK(image(m).dim() == rank(m));
        for (const auto& b : k.basis())
            CHECK(m.apply(b).empty());
    }
}

TEST_CASE("subspace operations are canonical and exact", "[exactla][property]")
{
    Rationals q;
    std::mt19937 rng(777);
    auto amb = VecSpace::numbered("V", 6);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_subspace(q, rng, amb, rng() % 5);
        auto b = random_subspace(q, rng, amb, rng() % 5);
        auto ab = intersect(a, b);
        CHECK(ab == intersect(b, a));
        CHECK(ab.dim() == a.dim() + b.dim() - sum(a, b).dim());
        CHECK(ab.is_subspace_of(a));
        CHECK(ab.is_subspace_of(b));
        auto qt = quotient(amb, a);
        CHECK(kernel(qt.projection) == a);
        CHECK(qt.space.dim() == amb.dim() - a.dim());
    }
}

TEST_CASE("bi-invariant fixpoint matches brute force", "[exactla][property]")
{
    // Oracle: the largest bi-invariant subspace of W is ∩_j t^j(W), and the
    // partial intersections stabilize within dim steps.
    PrimeField f(3);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng() % 5;
        auto amb = VecSpace::numbered("V", n);
        // t = random permutation composed with a random unipotent upper-triangular map
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<long>> pr(n, std::vector<long>(n, 0)), ur(n, std::vector<long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            pr[perm[i]][i] = 1;
            ur[i][i] = 1;
            for (std::size_t j = i + 1; j < n; ++j)
                ur[i][j] = static_cast<long>(rng() % 3);
        }
        auto p = LinMap<PrimeField>::from_rows(f, amb, amb, pr);
        auto u = LinMap<PrimeField>::from_rows(f, amb, amb, ur);
        auto t = compose(p, u);
        // u⁻¹ = Σ_{k<n} (1-u)^k since 1-u is nilpotent
        auto nil = LinMap<PrimeField>::identity(f, amb) - u;
        auto uinv = LinMap<PrimeField>::identity(f, amb);
        auto term = LinMap<PrimeField>::identity(f, amb);
        for (std::size_t k = 1; k < n; ++k) {
            term = compose(term, nil);
            uinv = uinv + term;
        }
        auto t_inv = compose(uinv, p.transpose());
        REQUIRE(compose(t, t_inv) == LinMap<PrimeField>::identity(f, amb));

        auto w = random_subspace(f, rng, amb, rng() % (n + 1));
        auto v = largest_bi_invariant_subspace(w, t, t_inv);
        CHECK(v.is_subspace_of(w));
        CHECK(image(t, v) == v);

        // ∩_{|j|≤2n} t^j(W) is the largest bi-invariant subspace in W.
        auto brute = w;
        for (std::size_t j = 1; j <= 2 * n; ++j) {
            brute = intersect(brute, image(power(t, j), w));
            brute = intersect(brute, image(power(t_inv, j), w));
        }
        CHECK(brute == v);
    }
}
