#pragma once

#include "tourtype/errors.hpp"
#include "tourtype/type_algebra.hpp"
#include "tourtype/tournament.hpp"
#include "tourtype/census.hpp"
#include "tourtype/digraph.hpp"
#include "tourtype/verify.hpp"
