#pragma once

#include "partpeaks/aggregate.hpp"
#include "partpeaks/closed_form.hpp"
#include "partpeaks/integer.hpp"
#include "partpeaks/io.hpp"
#include "partpeaks/power_series.hpp"
#include "partpeaks/qpoly.hpp"
#include "partpeaks/rgs_generator.hpp"
#include "partpeaks/series.hpp"
#include "partpeaks/stirling.hpp"
#include "partpeaks/verify.hpp"
#include "partpeaks/word.hpp"
