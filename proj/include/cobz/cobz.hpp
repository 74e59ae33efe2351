#pragma once

// Umbrella header: the whole library in one include.

#include "cobz/numbers.hpp"
#include "cobz/errors.hpp"
#include "cobz/boundary.hpp"
#include "cobz/scalar_multiset.hpp"
#include "cobz/bordism.hpp"
#include "cobz/layered.hpp"
#include "cobz/term.hpp"
#include "cobz/parse.hpp"
#include "cobz/typecheck.hpp"
#include "cobz/denote.hpp"
#include "cobz/quote.hpp"
#include "cobz/backend.hpp"
#include "cobz/theta_spec.hpp"
#include "cobz/trace.hpp"
#include "cobz/matrix.hpp"
#include "cobz/matrix_backend.hpp"
#include "cobz/matrix_io.hpp"
#include "cobz/cob_backend.hpp"
#include "cobz/evaluate.hpp"
#include "cobz/trace_ops.hpp"
#include "cobz/gen.hpp"
#include "cobz/checks.hpp"
