#pragma once

#include "burnkit/bounds.hpp"
#include "burnkit/branching.hpp"
#include "burnkit/burn.hpp"
#include "burnkit/decompose.hpp"
#include "burnkit/edgelist.hpp"
#include "burnkit/exact.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/intmath.hpp"
#include "burnkit/power.hpp"
