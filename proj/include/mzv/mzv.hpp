#pragma once

// Umbrella header: the whole workbench.

#include "arith.hpp"
#include "eval.hpp"
#include "index.hpp"
#include "lincomb.hpp"
#include "parallel.hpp"
#include "poset.hpp"
#include "products.hpp"
#include "qmatrix.hpp"
#include "regularize.hpp"
#include "relations.hpp"
#include "series.hpp"
#include "verify.hpp"
#include "word.hpp"
