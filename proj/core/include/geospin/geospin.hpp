#pragma once

#include "geospin/connection.hpp"
#include "geospin/curvature.hpp"
#include "geospin/dynamics.hpp"
#include "geospin/error.hpp"
#include "geospin/expr.hpp"
#include "geospin/geospin_matrix.hpp"
#include "geospin/manifold.hpp"
#include "geospin/spectrum.hpp"
