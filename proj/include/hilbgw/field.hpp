/**
 * @file field.hpp
 * @brief Coefficient fields for the pipeline and the maps that embed
 *        Q(t1,t2) constants into them.
 *
 * The eigen-data and R-matrix code is generic in its coefficient type F. An
 * embedding is a callable Scalar -> F:
 *   - ScalarEmbedding: the identity on Q(t1,t2);
 *   - FormalUnitEmbedding: constants into Q(t1,t2)[c], used to rescale q -> c q
 *     with c a fresh formal variable;
 *   - PointEmbedding: evaluation at rational (t1, t2) = (a, b).
 */
#pragma once

#include "rational.hpp"
#include "scalar.hpp"
#include "upoly.hpp"

namespace hilbgw {

struct ScalarEmbedding {
    Scalar operator()(const Scalar& x) const { return x; }
};

/** @brief Polynomials in a formal unit c over Q(t1,t2). */
using CPoly = UniPoly<Scalar>;

struct FormalUnitEmbedding {
    CPoly operator()(const Scalar& x) const { return CPoly(x); }
};

struct PointEmbedding {
    Rational t1, t2;
    Rational operator()(const Scalar& x) const { return x.evaluate(t1, t2); }
};

}  // namespace hilbgw
