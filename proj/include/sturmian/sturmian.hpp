#pragma once

// Umbrella header: exact quadratic arithmetic, rotation-coded words,
// palindromic and classical induction, substitution synthesis, and the
// numeric/combinatorial verification layer.

#include "sturmian/contfrac.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/induction.hpp"
#include "sturmian/quadirr.hpp"
#include "sturmian/subst.hpp"
#include "sturmian/verify.hpp"
#include "sturmian/words.hpp"
