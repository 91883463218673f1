#ifndef STRATA_STRATA_HPP
#define STRATA_STRATA_HPP

// Umbrella header: exact computation in the strata algebra of stable maps.

#include "strata/rational.hpp"
#include "strata/poly.hpp"
#include "strata/target.hpp"
#include "strata/graph.hpp"
#include "strata/element.hpp"
#include "strata/product.hpp"
#include "strata/stabilization.hpp"
#include "strata/dr.hpp"
#include "strata/oracle.hpp"
#include "strata/io.hpp"

#endif
