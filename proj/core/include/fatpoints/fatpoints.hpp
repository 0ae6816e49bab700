#pragma once

#include "fatpoints/arith.hpp"
#include "fatpoints/classes.hpp"
#include "fatpoints/cremona.hpp"
#include "fatpoints/dimension.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/minus_one.hpp"
#include "fatpoints/modular.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/plane.hpp"
#include "fatpoints/quadric.hpp"
#include "fatpoints/standard_form.hpp"
#include "fatpoints/sweep.hpp"
