#pragma once

#include "wrideal/arith.hpp"
#include "wrideal/diophantine.hpp"
#include "wrideal/latgeom.hpp"
#include "wrideal/quadfield.hpp"
#include "wrideal/survey.hpp"
