#ifndef BELLINV_BELLINV_HPP
#define BELLINV_BELLINV_HPP

// Umbrella header.

#include "bellinv/bell.hpp"
#include "bellinv/errors.hpp"
#include "bellinv/fracpoly.hpp"
#include "bellinv/json_io.hpp"
#include "bellinv/lambda.hpp"
#include "bellinv/mina.hpp"
#include "bellinv/multipoly.hpp"
#include "bellinv/problem_spec.hpp"
#include "bellinv/rational.hpp"
#include "bellinv/report.hpp"
#include "bellinv/rng.hpp"
#include "bellinv/series.hpp"
#include "bellinv/transforms.hpp"
#include "bellinv/unipoly.hpp"
#include "bellinv/verify.hpp"

#endif  // BELLINV_BELLINV_HPP
