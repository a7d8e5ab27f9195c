#pragma once

#include "gqs/basis.hpp"
#include "gqs/error.hpp"
#include "gqs/geometry.hpp"
#include "gqs/msa.hpp"
#include "gqs/operators.hpp"
#include "gqs/refine.hpp"
#include "gqs/shape.hpp"
#include "gqs/tridiagonal.hpp"
