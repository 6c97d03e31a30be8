#pragma once

#include "cfcalc/error.hpp"
#include "cfcalc/complex.hpp"
#include "cfcalc/stratification.hpp"
#include "cfcalc/function.hpp"
#include "cfcalc/operators.hpp"
#include "cfcalc/maps.hpp"
#include "cfcalc/analysis.hpp"
#include "cfcalc/fixtures.hpp"
#include "cfcalc/random.hpp"
#include "cfcalc/io.hpp"
#include "cfcalc/cli.hpp"
