#pragma once

#include "charzeta/lfunctions/dirichlet_l.hpp"
#include "charzeta/lfunctions/functional_equation.hpp"
#include "charzeta/lfunctions/generalized_bernoulli.hpp"
#include "charzeta/lfunctions/hurwitz.hpp"
#include "charzeta/lfunctions/special_values.hpp"
