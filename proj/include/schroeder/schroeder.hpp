#pragma once

// Umbrella header.

#include "schroeder/colored_dyck.hpp"
#include "schroeder/dissection.hpp"
#include "schroeder/exact.hpp"
#include "schroeder/lattice_path.hpp"
#include "schroeder/maps.hpp"
#include "schroeder/numbers.hpp"
#include "schroeder/ordered_tree.hpp"
#include "schroeder/paths.hpp"
#include "schroeder/reference.hpp"
#include "schroeder/trees.hpp"
