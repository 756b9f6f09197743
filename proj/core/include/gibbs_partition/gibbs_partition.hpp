#pragma once

#include "gibbs_partition/bounds.hpp"
#include "gibbs_partition/estimators.hpp"
#include "gibbs_partition/exact_analysis.hpp"
#include "gibbs_partition/model.hpp"
#include "gibbs_partition/model_io.hpp"
#include "gibbs_partition/parallel.hpp"
#include "gibbs_partition/rng.hpp"
#include "gibbs_partition/sampler.hpp"
#include "gibbs_partition/schedule.hpp"
#include "gibbs_partition/tpa.hpp"
