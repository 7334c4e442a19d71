#pragma once

// Exact computation of Bernstein-type polynomials of weighted-homogeneous
// isolated complete-intersection singularities, integral-root decision
// criteria for the intersection-homology D-module, and symbolic
// verification of Bernstein functional equations.

#include "bsato/bernstein.hpp"
#include "bsato/decide.hpp"
#include "bsato/errors.hpp"
#include "bsato/groebner.hpp"
#include "bsato/monomial.hpp"
#include "bsato/order.hpp"
#include "bsato/parse.hpp"
#include "bsato/poly.hpp"
#include "bsato/rational.hpp"
#include "bsato/singularity.hpp"
#include "bsato/weights.hpp"
#include "bsato/weylcheck.hpp"
