#pragma once

#include "becurv/edge_list.hpp"
#include "becurv/errors.hpp"
#include "becurv/forms.hpp"
#include "becurv/graph.hpp"
#include "becurv/solver.hpp"
#include "becurv/spaceform.hpp"
#include "becurv/symmetric_eigen.hpp"
#include "becurv/table.hpp"
#include "becurv/tilings.hpp"
