#pragma once

#include "manna/allocation.hpp"
#include "manna/fixtures.hpp"
#include "manna/generator.hpp"
#include "manna/instance.hpp"
#include "manna/json_io.hpp"
#include "manna/mdrr.hpp"
#include "manna/minimax.hpp"
#include "manna/oracle.hpp"
#include "manna/properties.hpp"
#include "manna/rational.hpp"
