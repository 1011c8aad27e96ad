// Exact linear algebra: fields, labeled spaces, sparse maps, subspaces.
#ifndef HOPFCYC_EXACTLA_HPP
#define HOPFCYC_EXACTLA_HPP

#include "hopfcyc/elimination.hpp"
#include "hopfcyc/error.hpp"
#include "hopfcyc/field.hpp"
#include "hopfcyc/lin_map.hpp"
#include "hopfcyc/sparse_vector.hpp"
#include "hopfcyc/subspace.hpp"
#include "hopfcyc/vec_space.hpp"

#endif  // HOPFCYC_EXACTLA_HPP
