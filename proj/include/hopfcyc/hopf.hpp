// Hopf algebras, module/comodules and their checks.
#ifndef HOPFCYC_HOPF_HPP
#define HOPFCYC_HOPF_HPP

#include "hopfcyc/hopf/builtins.hpp"
#include "hopfcyc/hopf/comodule_algebra.hpp"
#include "hopfcyc/hopf/group_algebra.hpp"
#include "hopfcyc/hopf/grouplikes.hpp"
#include "hopfcyc/hopf/hopf_algebra.hpp"
#include "hopfcyc/hopf/mod_comod.hpp"

#endif  // HOPFCYC_HOPF_HPP
