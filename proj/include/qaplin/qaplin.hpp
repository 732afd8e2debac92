#pragma once

// Umbrella header. The oracle lives in qaplin/oracle.hpp and is not pulled
// in here to keep the Eigen dependency opt-in.

#include "qaplin/builders.hpp"
#include "qaplin/decompose.hpp"
#include "qaplin/generate.hpp"
#include "qaplin/io.hpp"
#include "qaplin/lap.hpp"
#include "qaplin/linearize.hpp"
#include "qaplin/matrix.hpp"
#include "qaplin/objective.hpp"
#include "qaplin/permutation.hpp"
#include "qaplin/recognize.hpp"
#include "qaplin/rng.hpp"
#include "qaplin/solve.hpp"
