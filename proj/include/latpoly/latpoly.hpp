#pragma once

// Umbrella header: polymatroids on finite modular complemented lattices —
// rank and cover-weight axioms, cyclic flats with the convolution operator,
// the cyclic-flat axiom system, and the text/DOT document formats.

#include "latpoly/builders.hpp"
#include "latpoly/cf_axioms.hpp"
#include "latpoly/cyclic_flats.hpp"
#include "latpoly/document.hpp"
#include "latpoly/dot.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/polymatroid.hpp"
#include "latpoly/rational.hpp"
#include "latpoly/report.hpp"
