#pragma once

#include "klcells/shapes.hpp"
#include "klcells/perm.hpp"
#include "klcells/diagram.hpp"
#include "klcells/rs.hpp"
#include "klcells/cells.hpp"
#include "klcells/lifting.hpp"
#include "klcells/families.hpp"
#include "klcells/verify.hpp"
#include "klcells/json_io.hpp"
