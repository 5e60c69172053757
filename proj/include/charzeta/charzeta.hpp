#pragma once

#include "charzeta/characters/character.hpp"
#include "charzeta/error.hpp"
#include "charzeta/identities.hpp"
#include "charzeta/lfunctions.hpp"
#include "charzeta/numerics/bernoulli.hpp"
#include "charzeta/numerics/complex.hpp"
#include "charzeta/numerics/context.hpp"
#include "charzeta/numerics/gamma.hpp"
#include "charzeta/numerics/real.hpp"
#include "charzeta/series.hpp"
