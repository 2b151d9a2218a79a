#pragma once

#include "qimm/characters.hpp"
#include "qimm/combinatorics.hpp"
#include "qimm/engine.hpp"
#include "qimm/frobenius.hpp"
#include "qimm/qsym.hpp"
#include "qimm/rational.hpp"
#include "qimm/verification.hpp"
