// Shared module/comodule fixtures for the test suites.
#ifndef HOPFCYC_TESTS_FIXTURES_HPP
#define HOPFCYC_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "hopfcyc/hopf.hpp"

namespace fixtures {

using namespace hopfcyc;

template <Field K>
SparseVec<typename K::value_type> element(const HopfAlgebra<K>& h, const std::string& label)
{
    return h.basis_vector(h.space.index_of(label));
}

/// Character δ given by its values on the basis, in basis order.
template <Field K>
LinMap<K> character(const HopfAlgebra<K>& h, const std::vector<long>& values)
{
    std::vector<std::vector<long>> row{values};
    return LinMap<K>::from_rows(h.field, h.space, VecSpace::unit(), row);
}

/// k with coaction 1 ↦ g⊗1 and action δ.
template <Field K>
ModComod<K> char_module(const HopfAlgebra<K>& h, const std::string& g, const std::vector<long>& delta,
                        const std::string& name)
{
    return character_module(h, element(h, g), character(h, delta), name);
}

/// sign character of k[Z2] with σ = g: aYD (g is central) but not 0-stable.
template <Field K>
ModComod<K> z2_sign_twisted(const K& f)
{
    auto h = builtin_hopf(f, "Z2");
    return char_module(h, "g", {1, -1}, "k(g,sign)");
}

/// S3 with σ a transposition and δ = ε: stable but not aYD.
template <Field K>
ModComod<K> s3_transposition(const K& f)
{
    auto h = builtin_hopf(f, "S3");
    return char_module(h, "(12)", {1, 1, 1, 1, 1, 1}, "k((12),eps)");
}

/// Sweedler with (g, ε): stable aYD.
template <Field K>
ModComod<K> sweedler_g_eps(const K& f)
{
    auto h = builtin_hopf(f, "sweedler4");
    return char_module(h, "g", {1, 1, 0, 0}, "k(g,eps)");
}

/// Sweedler with (1, δ), δ(g) = −1, δ(x) = 0: stable aYD.
template <Field K>
ModComod<K> sweedler_one_sign(const K& f)
{
    auto h = builtin_hopf(f, "sweedler4");
    return char_module(h, "1", {1, -1, 0, 0}, "k(1,sign)");
}

/// Sweedler with the trivial pair (1, ε): stable but not aYD.
template <Field K>
ModComod<K> sweedler_trivial(const K& f)
{
    return trivial_module(builtin_hopf(f, "sweedler4"));
}

}  // namespace fixtures

#endif  // HOPFCYC_TESTS_FIXTURES_HPP
