#pragma once

#include "patrol/buffon.hpp"
#include "patrol/circle_intervals.hpp"
#include "patrol/circular_detection.hpp"
#include "patrol/linear_patrol.hpp"
#include "patrol/montecarlo.hpp"
#include "patrol/randomized_radius.hpp"
#include "patrol/rotating_frame.hpp"
#include "patrol/scenario.hpp"
#include "patrol/scenario_io.hpp"
