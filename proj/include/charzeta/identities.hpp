#pragma once

#include "charzeta/identities/main_theorem.hpp"
#include "charzeta/identities/mellin.hpp"
#include "charzeta/identities/ramanujan.hpp"
#include "charzeta/identities/report.hpp"
#include "charzeta/identities/special.hpp"
#include "charzeta/identities/table1.hpp"
