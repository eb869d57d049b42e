#pragma once

#include "gpdrisk/bayes.hpp"
#include "gpdrisk/error.hpp"
#include "gpdrisk/estimators.hpp"
#include "gpdrisk/gpd.hpp"
#include "gpdrisk/optimize.hpp"
#include "gpdrisk/random.hpp"
#include "gpdrisk/risk.hpp"
#include "gpdrisk/series.hpp"
#include "gpdrisk/stats.hpp"
#include "gpdrisk/study.hpp"
#include "gpdrisk/threshold.hpp"
