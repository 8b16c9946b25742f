#pragma once

#include "dpcut/connectivity.hpp"
#include "dpcut/edge_list_io.hpp"
#include "dpcut/errors.hpp"
#include "dpcut/formula.hpp"
#include "dpcut/frustration.hpp"
#include "dpcut/generators.hpp"
#include "dpcut/graph.hpp"
#include "dpcut/product.hpp"
#include "dpcut/structure.hpp"
#include "dpcut/sweep.hpp"
#include "dpcut/vertex_set.hpp"
