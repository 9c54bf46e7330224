#ifndef WELLCOVER_WELLCOVER_HPP
#define WELLCOVER_WELLCOVER_HPP

// Umbrella header for the whole library.

#include "wellcover/domination_search.hpp"
#include "wellcover/edge_ring.hpp"
#include "wellcover/enumerate.hpp"
#include "wellcover/errors.hpp"
#include "wellcover/generate.hpp"
#include "wellcover/graph.hpp"
#include "wellcover/io.hpp"
#include "wellcover/monomials.hpp"
#include "wellcover/recognition.hpp"
#include "wellcover/report.hpp"
#include "wellcover/scan.hpp"
#include "wellcover/version.hpp"
#include "wellcover/vertex_set.hpp"

#endif
