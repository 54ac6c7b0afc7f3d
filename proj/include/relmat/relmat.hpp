#pragma once

// Umbrella header: binary relations, rough-set approximation operators,
// circuit-based matroids, the two constructions between them, and the
// exhaustive verification catalog.

#include "relmat/constructions.hpp"
#include "relmat/enumeration.hpp"
#include "relmat/errors.hpp"
#include "relmat/format.hpp"
#include "relmat/matroid.hpp"
#include "relmat/parse.hpp"
#include "relmat/relation.hpp"
#include "relmat/set_family.hpp"
#include "relmat/universe.hpp"
