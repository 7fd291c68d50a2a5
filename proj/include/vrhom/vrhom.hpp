#pragma once

#include "vrhom/closure.hpp"
#include "vrhom/complex.hpp"
#include "vrhom/homology.hpp"
#include "vrhom/io.hpp"
#include "vrhom/relations.hpp"
#include "vrhom/semiuniform.hpp"
