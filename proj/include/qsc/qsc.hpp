#pragma once

#include "qsc/classical.hpp"
#include "qsc/csv.hpp"
#include "qsc/datasets.hpp"
#include "qsc/encoding.hpp"
#include "qsc/errors.hpp"
#include "qsc/experiment.hpp"
#include "qsc/graph.hpp"
#include "qsc/numerics.hpp"
#include "qsc/qpea.hpp"
#include "qsc/random.hpp"
#include "qsc/readout.hpp"
#include "qsc/register.hpp"
#include "qsc/selftest.hpp"
