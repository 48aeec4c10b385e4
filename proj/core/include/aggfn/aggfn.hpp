#pragma once

#include "aggfn/aggregator.hpp"
#include "aggfn/assoc.hpp"
#include "aggfn/axioms.hpp"
#include "aggfn/errors.hpp"
#include "aggfn/extended_real.hpp"
#include "aggfn/generator.hpp"
#include "aggfn/integrals.hpp"
#include "aggfn/interval.hpp"
#include "aggfn/means.hpp"
#include "aggfn/measure.hpp"
#include "aggfn/measure_io.hpp"
#include "aggfn/numeric.hpp"
#include "aggfn/report.hpp"
#include "aggfn/sampler.hpp"
#include "aggfn/signature.hpp"
#include "aggfn/weights.hpp"
