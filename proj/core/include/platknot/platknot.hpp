#pragma once

#include "platknot/braid.hpp"
#include "platknot/canonical.hpp"
#include "platknot/error.hpp"
#include "platknot/hilden.hpp"
#include "platknot/invariants.hpp"
#include "platknot/laurent.hpp"
#include "platknot/planar_diagram.hpp"
#include "platknot/plat.hpp"
#include "platknot/rational.hpp"
#include "platknot/spheres.hpp"
#include "platknot/twobridge.hpp"
