#pragma once

#include "adams.hpp"
#include "cohomology.hpp"
#include "cyclotomic.hpp"
#include "integer.hpp"
#include "kring.hpp"
#include "lens.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rep_ring.hpp"
#include "report.hpp"
#include "smith.hpp"
#include "truncated.hpp"
