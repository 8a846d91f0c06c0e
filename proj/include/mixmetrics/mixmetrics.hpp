#pragma once

// Umbrella header: exact anonymity metrics for threshold-mix rounds.

#include "mixmetrics/bigcount.hpp"
#include "mixmetrics/contingency_table.hpp"
#include "mixmetrics/counting.hpp"
#include "mixmetrics/csv.hpp"
#include "mixmetrics/errors.hpp"
#include "mixmetrics/experiments.hpp"
#include "mixmetrics/ingest.hpp"
#include "mixmetrics/integer_partitions.hpp"
#include "mixmetrics/limits.hpp"
#include "mixmetrics/metrics.hpp"
#include "mixmetrics/monomial_poly.hpp"
#include "mixmetrics/oracle.hpp"
#include "mixmetrics/partition.hpp"
#include "mixmetrics/permanent.hpp"
#include "mixmetrics/profile.hpp"
#include "mixmetrics/profile_spec.hpp"
