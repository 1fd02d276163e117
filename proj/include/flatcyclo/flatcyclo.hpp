#pragma once

#include "flatcyclo/analytics.hpp"
#include "flatcyclo/bigint.hpp"
#include "flatcyclo/closed_form.hpp"
#include "flatcyclo/error.hpp"
#include "flatcyclo/familysearch.hpp"
#include "flatcyclo/ntheory.hpp"
#include "flatcyclo/oracle.hpp"
#include "flatcyclo/polycore.hpp"
#include "flatcyclo/term_stream.hpp"
#include "flatcyclo/triple.hpp"
