#pragma once

#include "opuc/errors.hpp"
#include "opuc/gaussian_rational.hpp"
#include "opuc/expr.hpp"
#include "opuc/scalar.hpp"
#include "opuc/laurent.hpp"
#include "opuc/verblunsky.hpp"
#include "opuc/functional.hpp"
#include "opuc/paths.hpp"
#include "opuc/matrices.hpp"
#include "opuc/families.hpp"
#include "opuc/linearization.hpp"
