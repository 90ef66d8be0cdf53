#pragma once

// Umbrella header: shortcut sets and exact hopsets for directed graphs.

#include "hopforge/baselines.hpp"
#include "hopforge/bench.hpp"
#include "hopforge/chain_greedy.hpp"
#include "hopforge/chains.hpp"
#include "hopforge/diagnostics.hpp"
#include "hopforge/gen.hpp"
#include "hopforge/graph.hpp"
#include "hopforge/greedy.hpp"
#include "hopforge/perturb.hpp"
#include "hopforge/reach.hpp"
#include "hopforge/rng.hpp"
#include "hopforge/scc.hpp"
#include "hopforge/search.hpp"
#include "hopforge/setcover.hpp"
#include "hopforge/sqrt_shortcut.hpp"
#include "hopforge/supershortcut.hpp"
#include "hopforge/util.hpp"
#include "hopforge/validate.hpp"
