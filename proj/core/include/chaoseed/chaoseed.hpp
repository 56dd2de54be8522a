#pragma once

#include "chaoseed/error.hpp"
#include "chaoseed/logistic.hpp"
#include "chaoseed/mt19937.hpp"
#include "chaoseed/placement.hpp"
#include "chaoseed/stats.hpp"
#include "chaoseed/wire.hpp"
