#pragma once

#include "qtree/error.hpp"
#include "qtree/point.hpp"
#include "qtree/symbolic_set.hpp"
#include "qtree/complete_ideal.hpp"
#include "qtree/model.hpp"
#include "qtree/intersection.hpp"
#include "qtree/monomial.hpp"
