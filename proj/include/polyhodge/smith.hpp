#ifndef POLYHODGE_SMITH_HPP
#define POLYHODGE_SMITH_HPP

#include "polyhodge/matrix.hpp"

namespace polyhodge {

/// Elementary divisors d_1 | d_2 | ... of an integer matrix, as the
/// min(rows, cols) nonnegative diagonal entries of its Smith normal form
/// (zeros trail the nonzero divisors).
IntVec smith_diagonal(IntMatrix m);

}  // namespace polyhodge

#endif
