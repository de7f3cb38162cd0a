#pragma once

#include "assoc_graded.hpp"
#include "betti.hpp"
#include "complex.hpp"
#include "construction.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "free_module.hpp"
#include "graded_module.hpp"
#include "groebner.hpp"
#include "homology.hpp"
#include "koszul_check.hpp"
#include "koszul_homology.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "monomial_module.hpp"
#include "polynomial.hpp"
#include "resolution.hpp"
#include "ring.hpp"
#include "sweep.hpp"
#include "truncation.hpp"
