#pragma once

#include "enercast/ann.hpp"
#include "enercast/dataset.hpp"
#include "enercast/error.hpp"
#include "enercast/features.hpp"
#include "enercast/fixtures.hpp"
#include "enercast/forecast.hpp"
#include "enercast/metrics.hpp"
#include "enercast/model_io.hpp"
#include "enercast/normalize.hpp"
#include "enercast/pipeline.hpp"
#include "enercast/random.hpp"
#include "enercast/run_config.hpp"
#include "enercast/train.hpp"
#include "enercast/validation.hpp"
