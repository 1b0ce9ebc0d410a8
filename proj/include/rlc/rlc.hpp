#pragma once

#include "rlc/bounds.hpp"
#include "rlc/choosability.hpp"
#include "rlc/colouring.hpp"
#include "rlc/dangerous.hpp"
#include "rlc/error.hpp"
#include "rlc/exact.hpp"
#include "rlc/experiment.hpp"
#include "rlc/forbidden.hpp"
#include "rlc/gadget.hpp"
#include "rlc/generators.hpp"
#include "rlc/graph.hpp"
#include "rlc/graph_io.hpp"
#include "rlc/graph_spec.hpp"
#include "rlc/list_assignment.hpp"
#include "rlc/matching.hpp"
#include "rlc/order_formulas.hpp"
#include "rlc/quadrature.hpp"
#include "rlc/random.hpp"
#include "rlc/serialize.hpp"
#include "rlc/solver.hpp"
#include "rlc/witness.hpp"
