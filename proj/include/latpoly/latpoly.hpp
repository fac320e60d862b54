#pragma once

#include "latpoly/error.hpp"
#include "latpoly/integer.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/placing.hpp"
#include "latpoly/triangulation.hpp"
#include "latpoly/radon.hpp"
#include "latpoly/unimodular.hpp"
#include "latpoly/picktype.hpp"
#include "latpoly/search.hpp"
#include "latpoly/corpus.hpp"
#include "latpoly/io.hpp"
