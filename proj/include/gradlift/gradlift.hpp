#pragma once

/// Everything: exact arithmetic, bases, resolutions, tangent cones, lifting,
/// companions (Gin, Lex), linearity, invariants, reports and corpora.

#include "corpus.hpp"
#include "report.hpp"
