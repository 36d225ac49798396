// dirac2q.hpp
// Convenience umbrella for the whole library.

#pragma once

#include "dirac2q/bell.hpp"
#include "dirac2q/density.hpp"
#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/gates.hpp"
#include "dirac2q/io.hpp"
#include "dirac2q/linalg.hpp"
#include "dirac2q/verify.hpp"
