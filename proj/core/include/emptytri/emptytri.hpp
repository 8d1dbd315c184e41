#pragma once
// Umbrella header.

#include "emptytri/empty_triangles.hpp"
#include "emptytri/errors.hpp"
#include "emptytri/experiments.hpp"
#include "emptytri/extremal.hpp"
#include "emptytri/generators.hpp"
#include "emptytri/geometry.hpp"
#include "emptytri/graph.hpp"
#include "emptytri/incidence_graph.hpp"
#include "emptytri/io.hpp"
#include "emptytri/realizability.hpp"
