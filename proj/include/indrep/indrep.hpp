#pragma once

#include "cache.hpp"
#include "congruence.hpp"
#include "errors.hpp"
#include "group_engine.hpp"
#include "induced_rep.hpp"
#include "monomial.hpp"
#include "phase.hpp"
#include "psl2z.hpp"
#include "selberg_character.hpp"
#include "serialize.hpp"
