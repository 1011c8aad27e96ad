#ifndef HOPFCYC_COMPLEXES_HPP
#define HOPFCYC_COMPLEXES_HPP

#include "hopfcyc/complexes/comodule_algebra.hpp"
#include "hopfcyc/complexes/duality.hpp"
#include "hopfcyc/complexes/realization.hpp"
#include "hopfcyc/complexes/ta.hpp"

#endif  // HOPFCYC_COMPLEXES_HPP
