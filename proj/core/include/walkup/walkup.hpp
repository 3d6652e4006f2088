#pragma once

#include "walkup/complex.hpp"
#include "walkup/constructions.hpp"
#include "walkup/error.hpp"
#include "walkup/homology.hpp"
#include "walkup/io.hpp"
#include "walkup/rng.hpp"
#include "walkup/stacked.hpp"
#include "walkup/surgery.hpp"
#include "walkup/symmetry.hpp"
#include "walkup/tightness.hpp"
#include "walkup/walkup_class.hpp"
