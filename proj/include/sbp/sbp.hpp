// Umbrella header.

#ifndef SBP_SBP_HPP_
#define SBP_SBP_HPP_

#include "bounded.hpp"
#include "catalog.hpp"
#include "census.hpp"
#include "core.hpp"
#include "enumeration.hpp"
#include "io.hpp"
#include "map_transform.hpp"
#include "monoid.hpp"
#include "parallel.hpp"
#include "pointed_map.hpp"
#include "pseudo_action.hpp"
#include "relation.hpp"
#include "search.hpp"
#include "semibiproduct.hpp"
#include "synthesis.hpp"

#endif  // SBP_SBP_HPP_
