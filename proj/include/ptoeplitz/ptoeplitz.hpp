#pragma once

#include "ptoeplitz/error.hpp"
#include "ptoeplitz/matrix.hpp"
#include "ptoeplitz/eigen.hpp"
#include "ptoeplitz/geometry.hpp"
#include "ptoeplitz/operator.hpp"
#include "ptoeplitz/numerical_range.hpp"
#include "ptoeplitz/polynomial.hpp"
#include "ptoeplitz/forms.hpp"
#include "ptoeplitz/counterexample.hpp"
#include "ptoeplitz/io.hpp"
