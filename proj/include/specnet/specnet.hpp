#pragma once

// Spectral toolkit for directed-graph synchronizability: optimal-spread
// constructions, exact Laplacian characteristic polynomials, brute-force
// spectrum sweeps, and linear consensus simulation.

#include "specnet/bigint.hpp"
#include "specnet/consensus.hpp"
#include "specnet/construct.hpp"
#include "specnet/digraph.hpp"
#include "specnet/enumerate.hpp"
#include "specnet/errors.hpp"
#include "specnet/io.hpp"
#include "specnet/matrix.hpp"
#include "specnet/poly.hpp"
#include "specnet/rational.hpp"
#include "specnet/rng.hpp"
#include "specnet/spectrum.hpp"
#include "specnet/spread.hpp"
#include "specnet/trees.hpp"
#include "specnet/verify.hpp"
