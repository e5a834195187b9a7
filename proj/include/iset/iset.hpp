#pragma once
// Umbrella header for the iset library.

#include "iset/bigint.hpp"
#include "iset/constants.hpp"
#include "iset/estimators.hpp"
#include "iset/exact_count.hpp"
#include "iset/experiments.hpp"
#include "iset/generators.hpp"
#include "iset/graph.hpp"
#include "iset/rng.hpp"
#include "iset/seq_analysis.hpp"
#include "iset/stats.hpp"
#include "iset/version.hpp"
