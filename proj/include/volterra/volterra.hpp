#pragma once

#include "volterra/algebra.hpp"
#include "volterra/characters.hpp"
#include "volterra/corpus.hpp"
#include "volterra/derivations.hpp"
#include "volterra/dynamics.hpp"
#include "volterra/errors.hpp"
#include "volterra/io.hpp"
#include "volterra/linalg.hpp"
#include "volterra/local.hpp"
#include "volterra/parallel.hpp"
#include "volterra/rational.hpp"
#include "volterra/structure.hpp"
#include "volterra/suite.hpp"
