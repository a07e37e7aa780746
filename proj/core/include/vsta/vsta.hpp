#pragma once

#include "vsta/automaton.hpp"
#include "vsta/embed.hpp"
#include "vsta/error.hpp"
#include "vsta/io.hpp"
#include "vsta/term.hpp"
#include "vsta/vsa.hpp"
