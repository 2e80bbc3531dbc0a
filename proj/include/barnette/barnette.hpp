#pragma once

// Everything except the command-line front end.

#include "barnette/dual_trails.hpp"
#include "barnette/equivalence_checks.hpp"
#include "barnette/generators.hpp"
#include "barnette/reductions.hpp"
#include "barnette/rotation_draft.hpp"
#include "barnette/text_io.hpp"
