#pragma once

#include "brank/scalar.hpp"
#include "brank/matrix.hpp"
#include "brank/linalg.hpp"
#include "brank/random.hpp"
#include "brank/tensor.hpp"
#include "brank/verdict.hpp"
#include "brank/symmetrize.hpp"
#include "brank/strassen.hpp"
#include "brank/certify444.hpp"
#include "brank/secant.hpp"
#include "brank/generators.hpp"
#include "brank/numeric.hpp"
#include "brank/io.hpp"
