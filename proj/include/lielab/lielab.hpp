#pragma once

#include "lielab/scalar.hpp"
#include "lielab/poly.hpp"
#include "lielab/linalg.hpp"
#include "lielab/verdict.hpp"
#include "lielab/lie_algebra.hpp"
#include "lielab/points.hpp"
#include "lielab/regularity.hpp"
#include "lielab/catalog.hpp"
#include "lielab/commutator.hpp"
#include "lielab/io.hpp"
#include "lielab/verify.hpp"
