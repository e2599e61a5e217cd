#pragma once

// Umbrella header: exact flagged Schur polynomials, lattice-path partition
// functions and their determinant identities, Schubert polynomials, and the
// Catalan-number connections between them.

#include "bigint.hpp"
#include "catalan.hpp"
#include "errors.hpp"
#include "flagged_det.hpp"
#include "lattice.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "schubert.hpp"
#include "search.hpp"
#include "tableaux.hpp"
