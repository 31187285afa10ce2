#pragma once

#include "bricklayer/dynamics.hpp"
#include "bricklayer/graphs.hpp"
#include "bricklayer/io.hpp"
#include "bricklayer/polynomial.hpp"
#include "bricklayer/rational.hpp"
#include "bricklayer/search.hpp"
#include "bricklayer/spectra.hpp"
#include "bricklayer/spectral_polys.hpp"
#include "bricklayer/verify.hpp"
