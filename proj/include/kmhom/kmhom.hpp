#pragma once

// Umbrella header for the kmhom library.

#include "kmhom/cartan.hpp"
#include "kmhom/weight.hpp"
#include "kmhom/weyl.hpp"
#include "kmhom/roots.hpp"
#include "kmhom/linkage.hpp"
#include "kmhom/nilpotent.hpp"
#include "kmhom/verma.hpp"
#include "kmhom/homs.hpp"
#include "kmhom/problem.hpp"
