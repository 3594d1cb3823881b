#pragma once

#include "giftcount/asymptotics.hpp"
#include "giftcount/decimal.hpp"
#include "giftcount/errors.hpp"
#include "giftcount/etable.hpp"
#include "giftcount/formats.hpp"
#include "giftcount/genfun.hpp"
#include "giftcount/guards.hpp"
#include "giftcount/guesser.hpp"
#include "giftcount/hypergeometric.hpp"
#include "giftcount/integers.hpp"
#include "giftcount/linalg.hpp"
#include "giftcount/oracle.hpp"
#include "giftcount/polynomial.hpp"
#include "giftcount/power_series.hpp"
#include "giftcount/rational.hpp"
#include "giftcount/recurrence.hpp"
#include "giftcount/sequences.hpp"
#include "giftcount/stirling.hpp"
#include "giftcount/verify.hpp"
