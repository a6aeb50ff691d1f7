#pragma once

// Umbrella header for the bmf library: bit-packed Boolean matrices, the
// formal-concept machinery, the MDL cost model, the MDLGreConD and GreConD
// factorization algorithms, evaluation metrics, dataset I/O and JSON reports.

#include "bmf/bitset.hpp"
#include "bmf/matrix.hpp"
#include "bmf/fca.hpp"
#include "bmf/mdl.hpp"
#include "bmf/factorize.hpp"
#include "bmf/metrics.hpp"
#include "bmf/synthetic.hpp"
#include "bmf/io.hpp"
#include "bmf/report.hpp"
