#pragma once

#include "kcon/bounds.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/constructions.hpp"
#include "kcon/graph.hpp"
#include "kcon/graph_io.hpp"
#include "kcon/ledger.hpp"
#include "kcon/polynomial.hpp"
#include "kcon/rational.hpp"
#include "kcon/search.hpp"
#include "kcon/vertex_set.hpp"
