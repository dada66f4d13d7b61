#pragma once

#include "pathcon/dcs.hpp"
#include "pathcon/enumerate.hpp"
#include "pathcon/error.hpp"
#include "pathcon/fraction.hpp"
#include "pathcon/gamma_table.hpp"
#include "pathcon/graph.hpp"
#include "pathcon/graph_io.hpp"
#include "pathcon/oracle.hpp"
#include "pathcon/solver.hpp"
#include "pathcon/subroutines.hpp"
#include "pathcon/vertex_set.hpp"
