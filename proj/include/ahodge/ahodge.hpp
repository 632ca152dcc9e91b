#pragma once

#include "ahodge/scalar.hpp"
#include "ahodge/trigpoly.hpp"
#include "ahodge/form.hpp"
#include "ahodge/model.hpp"
#include "ahodge/model_io.hpp"
#include "ahodge/linalg.hpp"
#include "ahodge/calculus.hpp"
#include "ahodge/random.hpp"
#include "ahodge/validate.hpp"
#include "ahodge/solver.hpp"
#include "ahodge/report.hpp"
