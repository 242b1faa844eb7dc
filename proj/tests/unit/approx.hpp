#pragma once

#include "doctest.h"

// doctest::Approx adds an absolute scale of 1; these tests compare relatively.
inline doctest::Approx approx(double v) { return doctest::Approx(v).scale(0.0); }
