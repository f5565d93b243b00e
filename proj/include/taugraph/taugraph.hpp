#pragma once

#include "taugraph/analytic.hpp"
#include "taugraph/error.hpp"
#include "taugraph/families.hpp"
#include "taugraph/graph.hpp"
#include "taugraph/io.hpp"
#include "taugraph/laplacian.hpp"
#include "taugraph/large.hpp"
#include "taugraph/reference_tables.hpp"
#include "taugraph/structure.hpp"
#include "taugraph/summation.hpp"
#include "taugraph/tau.hpp"
#include "taugraph/verify.hpp"
