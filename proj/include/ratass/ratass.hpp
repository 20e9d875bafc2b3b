#pragma once

#include "ratass/arith.hpp"
#include "ratass/associahedra.hpp"
#include "ratass/collapse.hpp"
#include "ratass/complex.hpp"
#include "ratass/error.hpp"
#include "ratass/homology.hpp"
#include "ratass/io.hpp"
#include "ratass/lattice.hpp"
#include "ratass/membership.hpp"
#include "ratass/obstruction.hpp"
#include "ratass/polygon.hpp"
#include "ratass/vertex_set.hpp"
