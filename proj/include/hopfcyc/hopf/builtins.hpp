/**
 * Named builtin fixtures: Z2, Z3, S3, sweedler4, dual:Z2 (stable public names),
 * plus the trivial group algebra "Z1".
 */
#ifndef HOPFCYC_HOPF_BUILTINS_HPP
#define HOPFCYC_HOPF_BUILTINS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/hopf/group_algebra.hpp"

namespace hopfcyc {

inline std::vector<std::string> builtin_hopf_names() { return {"Z2", "Z3", "S3", "sweedler4", "dual:Z2"}; }

inline std::optional<CayleyTable> builtin_group(const std::string& name)
{
    if (name == "Z1")
        return cyclic_group(1);
    if (name == "Z2")
        return cyclic_group(2);
    if (name == "Z3")
        return cyclic_group(3);
    if (name == "S3")
        return symmetric_group_3();
    return std::nullopt;
}

template <Field K>
HopfAlgebra<K> builtin_hopf(const K& field, const std::string& name)
{
    if (auto g = builtin_group(name))
        return group_algebra(field, *g, name);
    if (name == "sweedler4")
        return sweedler_h4(field);
    if (name.rfind("dual:", 0) == 0) {
        auto d = dual_hopf(builtin_hopf(field, name.substr(5)));
        d.name = name;
        return d;
    }
    throw PreconditionError("unknown builtin Hopf algebra '" + name + "'");
}

}  // namespace hopfcyc

#endif  // HOPFCYC_HOPF_BUILTINS_HPP
