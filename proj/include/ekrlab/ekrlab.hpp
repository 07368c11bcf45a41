#pragma once

#include "bitset.hpp"
#include "bounds.hpp"
#include "budget.hpp"
#include "combinatorics.hpp"
#include "conflict_graph.hpp"
#include "enumeration.hpp"
#include "hypergraph.hpp"
#include "intersection.hpp"
#include "permutation.hpp"
#include "random.hpp"
#include "setting.hpp"
#include "spectral.hpp"
#include "subspace.hpp"
