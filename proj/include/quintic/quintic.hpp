#pragma once

// Umbrella header: exact quintic solvability-by-radicals classification with
// a floating-point root-level oracle.

#include "quintic/classifier.hpp"
#include "quintic/crosscheck.hpp"
#include "quintic/errors.hpp"
#include "quintic/invariants.hpp"
#include "quintic/oracle.hpp"
#include "quintic/parser.hpp"
#include "quintic/polynomial.hpp"
#include "quintic/rational.hpp"
#include "quintic/report.hpp"
#include "quintic/selftest.hpp"
