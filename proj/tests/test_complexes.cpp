#include <catch_amalgamated.hpp>

#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "hopfcyc/complexes.hpp"

using namespace hopfcyc;

namespace {

/// True when at least one entry starts with `prefix` and all such entries passed.
bool passed_with_prefix(const CheckReport& r, const std::string& prefix)
{
    bool seen = false;
    for (const auto& e : r.entries())
        if (e.name.rfind(prefix, 0) == 0) {
            seen = true;
            if (!e.passed)
                return false;
        }
    return seen;
}

std::string first_failure(const CheckReport& r)
{
    auto e = r.first_failure();
    return e ? e->name + " | " + e->witness : "";
}

struct Case
{
    std::string label;
    std::function<ModComod<Rationals>()> make;
    std::size_t N;
};

/// The identity-suite grid: each builtin with the trivial pair and a stable aYD character.
std::vector<Case> suite_cases()
{
    Rationals q;
    return {
        {"Z2 trivial", [q] { return trivial_module(builtin_hopf(q, "Z2")); }, 3},
        {"Z2 (g,eps)", [q] { return fixtures::char_module(builtin_hopf(q, "Z2"), "g", {1, 1}, "k(g,eps)"); }, 3},
        {"Z3 trivial", [q] { return trivial_module(builtin_hopf(q, "Z3")); }, 3},
        {"Z3 (g,eps)", [q] { return fixtures::char_module(builtin_hopf(q, "Z3"), "g", {1, 1, 1}, "k(g,eps)"); }, 3},
        {"S3 trivial", [q] { return trivial_module(builtin_hopf(q, "S3")); }, 3},
        {"S3 (1,sign)",
         [q] { return fixtures::char_module(builtin_hopf(q, "S3"), "e", {1, -1, -1, -1, 1, 1}, "k(1,sign)"); }, 3},
        {"sweedler4 (g,eps)", [q] { return fixtures::sweedler_g_eps(q); }, 3},
        {"sweedler4 (1,sign)", [q] { return fixtures::sweedler_one_sign(q); }, 3},
    };
}

}  // namespace

TEST_CASE("S3 fixture labels match the sign character", "[complexes]")
{
    auto h = builtin_hopf(Rationals{}, "S3");
    const std::vector<std::string> expected{"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    REQUIRE(h.dim() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(h.space.label(i) == expected[i]);
}

TEST_CASE("identity suites pass on every fixture", "[complexes][suites]")
{
    for (const auto& c : suite_cases()) {
        INFO(c.label);
        auto x = c.make();
        REQUIRE(is_stable_ayd(x));

        auto ta = build_Ta(x, c.N);
        CHECK(ta.report.all_passed());
        CHECK(passed_with_prefix(ta.report, "face lemma"));
        INFO(first_failure(ta.report));

        auto phi = phi_iso(x, ta);
        CHECK(phi.bar.report.all_passed());
        CHECK(phi.report.all_passed());

        auto cm = build_CMa(x, c.N);
        CHECK(cm.report.all_passed());
        CHECK(cm.is_cyclic);
        CHECK(passed_with_prefix(cm.report, "cyclic order t^(n+1) = id"));

        auto bc = build_BCa(x, cm);
        CHECK(bc.report.all_passed());
        CHECK(bc.is_cyclic);

        auto tc = build_Tc(x, c.N);
        CHECK(tc.report.all_passed());
        CHECK(check_identities(tc, StructureKind::para_cyclic).checks.all_passed());

        auto dual = dualize(tc);
        CHECK(dual.report.all_passed());
        for (std::size_t n = 0; n <= c.N; ++n)
            CHECK(dual.levels[n].space.dim() == tc.levels[n].space.dim());
    }
}

TEST_CASE("T^a of Z2 at n=1 fixes g⊗g⊗1", "[complexes]")
{
    Rationals q;
    auto x = trivial_module(builtin_hopf(q, "Z2"));
    auto ta = build_Ta(x, 1);
    // (g, g, 1) has index (1·2 + 1)·1 + 0 in H⊗H⊗k.
    const Index gg = 3;
    SparseVec<mpq_class> v;
    v.entries.push_back({gg, q.one()});
    CHECK(sparse_equal(q, ta.levels[1].cyclic->apply(v), v));
}

TEST_CASE("T^a is only para-cyclic on sweedler4 with (1,sign)", "[complexes]")
{
    Rationals q;
    auto ta = build_Ta(fixtures::sweedler_one_sign(q), 3);
    auto ids = check_identities(ta, StructureKind::para_cyclic);
    CHECK(ids.checks.all_passed());
    CHECK_FALSE(ids.cyclic_order_holds());
    CHECK_FALSE(check_identities(ta, StructureKind::cyclic).checks.all_passed());
}

TEST_CASE("CM^a is not cyclic when X is not stable aYD", "[complexes]")
{
    Rationals q;
    auto cm = build_CMa(fixtures::sweedler_trivial(q), 2);
    CHECK_FALSE(cm.report.all_passed());
    CHECK_FALSE(cm.is_cyclic);
}

TEST_CASE("p and i invert each other on the invariants", "[complexes][iso]")
{
    for (const auto& c : suite_cases()) {
        INFO(c.label);
        auto x = c.make();
        auto ta = build_Ta(x, c.N);
        attach_coaction(ta, x);
        auto pi = pi_maps(x, invariant_subcomplex(ta, x.hopf));
        CHECK(passed_with_prefix(pi.report, "i p = id"));
        CHECK(passed_with_prefix(pi.report, "p i = id on invariants"));
        CHECK(passed_with_prefix(pi.report, "p lands in invariants"));
        auto cm = build_CMa(x, c.N);
        CHECK(passed_with_prefix(cm.report, "tau p = p t"));
    }
}

TEST_CASE("PCM sits between the invariants and T^a", "[complexes][pcm]")
{
    for (const auto& c : suite_cases()) {
        INFO(c.label);
        auto x = c.make();
        auto ta = build_Ta(x, c.label.rfind("S3", 0) == 0 ? 2 : c.N);
        attach_coaction(ta, x);
        auto pcm = build_PCMa(ta, x.hopf);
        INFO(first_failure(pcm.report));
        CHECK(pcm.report.all_passed());
        CHECK(passed_with_prefix(pcm.report, "T^(a,H) in PCM"));
        CHECK(passed_with_prefix(pcm.report, "PCM^H = T^(a,H)"));
        REQUIRE(pcm.realization.has_value());
    }
}

TEST_CASE("PCM agrees with a brute-force intersection over a full period of tau", "[complexes][pcm]")
{
    Rationals q;
    std::vector<ModComod<Rationals>> xs{trivial_module(builtin_hopf(q, "S3")), fixtures::sweedler_g_eps(q),
                                       fixtures::sweedler_one_sign(q)};
    for (const auto& x : xs) {
        INFO(x.hopf.name << " " << x.name);
        auto ta = build_Ta(x, 2);
        attach_coaction(ta, x);
        auto pcm = build_PCMa(ta, x.hopf);
        for (std::size_t n = 0; n <= 2; ++n) {
            const auto& lv = ta.levels[n];
            const auto id = LinMap<Rationals>::identity(q, lv.space);
            std::size_t period = 0;
            auto t = *lv.cyclic;
            for (std::size_t k = 1; k <= 64 && !period; ++k, t = compose(*lv.cyclic, t))
                if (t == id)
                    period = k;
            REQUIRE(period > 0);
            auto oracle = Subspace<Rationals>::full(q, lv.space);
            auto tj = id;
            for (std::size_t j = 0; j < period; ++j, tj = compose(*lv.cyclic, tj))
                oracle = intersect(oracle, kernel(coaction_commutator(x.hopf, *lv.coaction, tj)));
            CHECK(oracle == pcm.pcm[n]);
        }
    }
}

TEST_CASE("PCM is all of T^a for commutative H", "[complexes][pcm]")
{
    Rationals q;
    for (const std::string name : {"Z2", "Z3", "dual:Z2"}) {
        INFO(name);
        auto h = builtin_hopf(q, name);
        REQUIRE(h.is_commutative());
        auto x = trivial_module(h);
        auto ta = build_Ta(x, 3);
        attach_coaction(ta, x);
        auto pcm = build_PCMa(ta, h);
        CHECK(pcm.report.all_passed());
        auto bc = build_BCa(x, build_CMa(x, 3));
        for (std::size_t n = 0; n <= 3; ++n) {
            CHECK(pcm.pcm[n].dim() == ta.levels[n].space.dim());
            CHECK(pcm.pcm[n].dim() == h.dim() * bc.levels[n].space.dim());
        }
    }
}

TEST_CASE("PCM dimensions on non-commutative fixtures", "[complexes][pcm]")
{
    Rationals q;
    auto dims = [&](const ModComod<Rationals>& x) {
        auto ta = build_Ta(x, 2);
        attach_coaction(ta, x);
        auto pcm = build_PCMa(ta, x.hopf);
        std::vector<std::size_t> d;
        for (const auto& s : pcm.pcm)
            d.push_back(s.dim());
        return d;
    };
    CHECK(dims(trivial_module(builtin_hopf(q, "S3"))) == std::vector<std::size_t>{6, 18, 66});
    CHECK(dims(fixtures::sweedler_g_eps(q)) == std::vector<std::size_t>{4, 10, 29});
}

TEST_CASE("duality maps on stable aYD fixtures", "[complexes][duality]")
{
    for (const auto& c : suite_cases()) {
        INFO(c.label);
        auto x = c.make();
        const std::size_t N = c.label.rfind("S3", 0) == 0 ? 2 : c.N;
        auto ta = build_Ta(x, N);
        auto tc = build_Tc(x, N);
        auto dm = duality_maps(x, ta, tc, dualize(tc));
        INFO(first_failure(dm.report));
        CHECK(dm.report.all_passed());
        CHECK(dm.beta_factors);
        CHECK(passed_with_prefix(dm.report, "beta alpha = id on T^(a,H)"));
        CHECK(passed_with_prefix(dm.report, "q alpha beta = q"));
        CHECK(passed_with_prefix(dm.report, "q alpha bijective on T^(a,H)"));
        CHECK(passed_with_prefix(dm.report, "q alpha intertwines cyclic structure"));
        REQUIRE(dm.cmc_dual.has_value());
        CHECK(dm.cmc_dual->is_cyclic);
    }
}

TEST_CASE("beta factors through q exactly for aYD modules", "[complexes][duality]")
{
    Rationals q;
    struct Expect
    {
        ModComod<Rationals> x;
        bool ayd;
    };
    std::vector<Expect> cases{{fixtures::s3_transposition(q), false},
                              {fixtures::sweedler_trivial(q), false},
                              {fixtures::z2_sign_twisted(q), true}};
    for (const auto& c : cases) {
        INFO(c.x.hopf.name << " " << c.x.name);
        REQUIRE(check_ayd(c.x) == c.ayd);
        auto ta = build_Ta(c.x, 2);
        auto tc = build_Tc(c.x, 2);
        auto dm = duality_maps(c.x, ta, tc, dualize(tc));
        CHECK(dm.beta_factors == c.ayd);
        CHECK(dm.report.all_passed());
    }
}

TEST_CASE("the inverse-rotation form of the beta relation fails from n = 2", "[complexes][duality]")
{
    Rationals q;
    auto x = trivial_module(builtin_hopf(q, "Z2"));
    auto tc = build_Tc(x, 2);
    for (std::size_t n = 0; n <= 2; ++n) {
        auto b = beta_map(x, n);
        const bool inverse_form = compose(ta_cyclic_inv(x, n), b) == compose(b, tc.levels[n].cocyclic);
        const bool forward_form = compose(ta_cyclic(x, n), b) == compose(b, tc.levels[n].cocyclic);
        CHECK(forward_form);
        CHECK(inverse_form == (n < 2));
    }
}

TEST_CASE("comodule-algebra complex of B over itself reproduces T^a", "[complexes][comodule-algebra]")
{
    Rationals q;
    for (const std::string name : {"Z2", "Z3"}) {
        INFO(name);
        auto h = builtin_hopf(q, name);
        auto x = trivial_module(h);
        auto ta = build_Ta(x, 3);
        attach_coaction(ta, x);
        auto c = build_Ta_comodule_algebra(regular_comodule_algebra(h), with_right_coaction(x), 3);
        INFO(first_failure(c.report));
        CHECK(c.report.all_passed());
        auto inv = invariant_subcomplex(ta, h);
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto& a = ta.levels[n];
            const auto& b = c.ta.levels[n];
            CHECK(a.faces == b.faces);
            CHECK(*a.cyclic == *b.cyclic);
            CHECK(*a.coaction == *b.coaction);
            CHECK(c.cm[n] == inv[n]);
        }
        REQUIRE(c.cm_realization.has_value());
        for (std::size_t n = 0; n <= 3; ++n) {
            const auto& lv = c.cm_realization->levels[n];
            CHECK(power(*lv.cyclic, n + 1) == LinMap<Rationals>::identity(q, lv.space));
        }
    }
}

TEST_CASE("comodule-algebra complex rejects x_(1)x_(0) != x", "[complexes][comodule-algebra]")
{
    Rationals q;
    auto h = builtin_hopf(q, "Z2");
    auto x = fixtures::z2_sign_twisted(q);  // g acts by -1 and x ↦ x⊗g: x_(1)x_(0) = -x
    CHECK_THROWS_AS(build_Ta_comodule_algebra(regular_comodule_algebra(h), with_right_coaction(x), 2),
                    PreconditionError);
}
