#pragma once

// Exact computation of c-nilpotent multipliers of finitely generated abelian
// groups, the Ext/Tor/Hom/tensor functors on that category, and mechanical
// verification of the commutation identities between them.

#include "nilmult/commutators.hpp"
#include "nilmult/compositions.hpp"
#include "nilmult/errors.hpp"
#include "nilmult/expr.hpp"
#include "nilmult/fgab.hpp"
#include "nilmult/homalg.hpp"
#include "nilmult/matrix.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/numtheory.hpp"
