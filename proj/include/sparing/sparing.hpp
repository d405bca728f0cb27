#pragma once

// Convenience umbrella include.

#include "sparing/dot.hpp"
#include "sparing/edge_list.hpp"
#include "sparing/exact.hpp"
#include "sparing/generate.hpp"
#include "sparing/graph.hpp"
#include "sparing/greedy.hpp"
#include "sparing/labeling.hpp"
#include "sparing/result.hpp"
