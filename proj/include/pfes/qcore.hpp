#pragma once

// Exact arithmetic in one variable q: polynomials, rational functions,
// Laurent polynomials, q-Pochhammer symbols, Gaussian binomials and
// terminating basic hypergeometric series.

#include "pfes/qcore/format.hpp"
#include "pfes/qcore/qlaurent.hpp"
#include "pfes/qcore/qpoly.hpp"
#include "pfes/qcore/qrational.hpp"
#include "pfes/qcore/qseries.hpp"
