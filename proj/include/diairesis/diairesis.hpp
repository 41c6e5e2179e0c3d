#pragma once

// umbrella header

#include "diairesis/division_tree.hpp"
#include "diairesis/dot.hpp"
#include "diairesis/errors.hpp"
#include "diairesis/formula.hpp"
#include "diairesis/four_valued.hpp"
#include "diairesis/fractal.hpp"
#include "diairesis/phi_number.hpp"
#include "diairesis/powerset.hpp"
#include "diairesis/predicate_table.hpp"
#include "diairesis/rational.hpp"
#include "diairesis/table_io.hpp"

