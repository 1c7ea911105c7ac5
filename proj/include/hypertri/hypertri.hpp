#pragma once

#include "canonical.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "hg_io.hpp"
#include "hypergraph.hpp"
#include "partition.hpp"
#include "patterns.hpp"
#include "search.hpp"
#include "threshold.hpp"
#include "vertex_set.hpp"
