#pragma once

// Umbrella header for the angular control chart library.

#include "acc/acl.hpp"
#include "acc/chart.hpp"
#include "acc/config.hpp"
#include "acc/distributions.hpp"
#include "acc/error.hpp"
#include "acc/oracle.hpp"
#include "acc/render.hpp"
#include "acc/rng.hpp"
#include "acc/scales.hpp"
#include "acc/simulate.hpp"
#include "acc/special.hpp"
