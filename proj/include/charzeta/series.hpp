#pragma once

#include "charzeta/series/budget.hpp"
#include "charzeta/series/correction.hpp"
#include "charzeta/series/divisor.hpp"
#include "charzeta/series/kernel.hpp"
#include "charzeta/series/lambert.hpp"
#include "charzeta/series/trig.hpp"
