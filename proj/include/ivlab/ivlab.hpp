#pragma once

#include "ivlab/analysis.hpp"
#include "ivlab/axioms.hpp"
#include "ivlab/sampling.hpp"
#include "ivlab/semistar.hpp"
#include "ivlab/text_parse.hpp"
#include "ivlab/text_print.hpp"
#include "ivlab/valuations.hpp"
