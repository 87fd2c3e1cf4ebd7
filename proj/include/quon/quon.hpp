#pragma once

#include "quon/errors.hpp"
#include "quon/polynomial.hpp"
#include "quon/rational_function.hpp"
#include "quon/matrix.hpp"
#include "quon/colored_perm.hpp"
#include "quon/group_algebra.hpp"
#include "quon/quon_engine.hpp"
#include "quon/gram.hpp"
#include "quon/formulas.hpp"
#include "quon/posdef.hpp"
