#pragma once

#include "vrhom/relations/base.hpp"
#include "vrhom/relations/metric.hpp"
#include "vrhom/relations/relation.hpp"
#include "vrhom/relations/space.hpp"
