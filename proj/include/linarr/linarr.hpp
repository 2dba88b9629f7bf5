#ifndef LINARR_LINARR_HPP
#define LINARR_LINARR_HPP

#include "linarr/crossings.hpp"
#include "linarr/experiments.hpp"
#include "linarr/io.hpp"
#include "linarr/predictors.hpp"
#include "linarr/random_trees.hpp"
#include "linarr/report.hpp"
#include "linarr/tree.hpp"
#include "linarr/verify.hpp"

#endif  // LINARR_LINARR_HPP
