#pragma once

#include "ncpk/counting.hpp"
#include "ncpk/formulas.hpp"
#include "ncpk/perm.hpp"
#include "ncpk/nc.hpp"
#include "ncpk/poset.hpp"
#include "ncpk/nc_poset.hpp"
#include "ncpk/mdiv.hpp"
#include "ncpk/hurwitz.hpp"
#include "ncpk/geometry.hpp"
#include "ncpk/parking.hpp"
#include "ncpk/trees.hpp"
#include "ncpk/paths.hpp"
#include "ncpk/typeb.hpp"
#include "ncpk/verify.hpp"
