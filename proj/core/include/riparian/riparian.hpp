#pragma once

#include "riparian/analysis.hpp"
#include "riparian/axioms.hpp"
#include "riparian/basin.hpp"
#include "riparian/error.hpp"
#include "riparian/numeric.hpp"
#include "riparian/problem.hpp"
#include "riparian/rational.hpp"
#include "riparian/rule_spec.hpp"
#include "riparian/rules.hpp"
