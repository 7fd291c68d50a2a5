#pragma once

#include "vrhom/complex/build.hpp"
#include "vrhom/complex/maps.hpp"
#include "vrhom/complex/simplex.hpp"
#include "vrhom/complex/simplicial_complex.hpp"
