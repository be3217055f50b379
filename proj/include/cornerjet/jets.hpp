#pragma once

// Exact jet arithmetic: one- and two-variable power series and Laurent series.
#include "cornerjet/jet1.hpp"
#include "cornerjet/jet2.hpp"
#include "cornerjet/laurent_jet.hpp"
#include "cornerjet/laurent_jet2.hpp"
