#pragma once

#include "vrhom/algebra/field.hpp"
#include "vrhom/algebra/matrix.hpp"
#include "vrhom/algebra/smith.hpp"
#include "vrhom/algebra/sparse.hpp"
#include "vrhom/homology/chain.hpp"
#include "vrhom/homology/homology.hpp"
#include "vrhom/homology/induced.hpp"
