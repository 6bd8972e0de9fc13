#pragma once

#include "dilint/config.hpp"
#include "dilint/detectors.hpp"
#include "dilint/errors.hpp"
#include "dilint/harness.hpp"
#include "dilint/injection.hpp"
#include "dilint/lexer.hpp"
#include "dilint/metrics.hpp"
#include "dilint/model.hpp"
#include "dilint/parser.hpp"
#include "dilint/pipeline.hpp"
#include "dilint/report.hpp"
#include "dilint/rules.hpp"
#include "dilint/tree_walk.hpp"
#include "dilint/type_index.hpp"
