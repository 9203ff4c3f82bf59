#pragma once

#include "complex.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "predictor.hpp"
#include "reduction.hpp"
#include "smith.hpp"
#include "sparse_matrix.hpp"
#include "verification.hpp"
#include "vertex_set.hpp"
