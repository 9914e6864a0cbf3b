#ifndef MCGS_MCGS_HPP
#define MCGS_MCGS_HPP

#include "mcgs/graph.hpp"
#include "mcgs/rng.hpp"
#include "mcgs/structure_detect.hpp"
#include "mcgs/ranking.hpp"
#include "mcgs/sampling.hpp"
#include "mcgs/baselines.hpp"
#include "mcgs/metrics.hpp"
#include "mcgs/harness.hpp"

#endif
