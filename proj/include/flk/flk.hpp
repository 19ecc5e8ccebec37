#pragma once

#include "flk/braid.hpp"
#include "flk/braid_equality.hpp"
#include "flk/budget.hpp"
#include "flk/error.hpp"
#include "flk/gauss_code.hpp"
#include "flk/link_search.hpp"
#include "flk/markov.hpp"
#include "flk/modular.hpp"
#include "flk/moves.hpp"
#include "flk/random.hpp"
#include "flk/verdict.hpp"
#include "flk/yangbaxter.hpp"
