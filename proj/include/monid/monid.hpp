#pragma once

// Umbrella header for the library (the CLI layer lives in monid/cli.hpp).

#include "monid/borel.hpp"
#include "monid/clutter.hpp"
#include "monid/core.hpp"
#include "monid/decomposition.hpp"
#include "monid/error.hpp"
#include "monid/format.hpp"
#include "monid/parse.hpp"
#include "monid/witness.hpp"
