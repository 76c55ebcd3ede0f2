#pragma once

#include "symnet/errors.hpp"
#include "symnet/weight.hpp"
#include "symnet/network.hpp"
#include "symnet/network_io.hpp"
#include "symnet/fixtures.hpp"
#include "symnet/random.hpp"
#include "symnet/generators.hpp"
#include "symnet/unit_rules.hpp"
#include "symnet/legality.hpp"
#include "symnet/scheduler.hpp"
#include "symnet/oracle.hpp"
#include "symnet/engine.hpp"
#include "symnet/experiments.hpp"
