#ifndef BAS_BAS_HPP_
#define BAS_BAS_HPP_

#include "bas/objectives.hpp"
#include "bas/oracle.hpp"
#include "bas/rng.hpp"
#include "bas/schedule.hpp"
#include "bas/search.hpp"
#include "bas/types.hpp"

#endif  // BAS_BAS_HPP_
