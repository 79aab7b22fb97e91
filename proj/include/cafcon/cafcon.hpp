#pragma once

#include "cafcon/bitset.hpp"
#include "cafcon/caf_format.hpp"
#include "cafcon/cnf.hpp"
#include "cafcon/dpll.hpp"
#include "cafcon/error.hpp"
#include "cafcon/fuzz.hpp"
#include "cafcon/model.hpp"
#include "cafcon/random.hpp"
#include "cafcon/reduction.hpp"
#include "cafcon/sat_concurrence.hpp"
#include "cafcon/semantics.hpp"
