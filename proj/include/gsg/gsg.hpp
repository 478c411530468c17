#pragma once

#include "gsg/context.hpp"
#include "gsg/core.hpp"
#include "gsg/enumerate.hpp"
#include "gsg/error.hpp"
#include "gsg/extension.hpp"
#include "gsg/fuzzy.hpp"
#include "gsg/grade.hpp"
#include "gsg/ideal.hpp"
#include "gsg/io.hpp"
#include "gsg/operator.hpp"
#include "gsg/subset.hpp"
#include "gsg/transfer.hpp"
#include "gsg/verify/catalog.hpp"
#include "gsg/verify/population.hpp"
#include "gsg/verify/report.hpp"
#include "gsg/verify/runner.hpp"
