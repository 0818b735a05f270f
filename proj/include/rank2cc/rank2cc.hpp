#pragma once

#include "rank2cc/ccmap.hpp"
#include "rank2cc/check_report.hpp"
#include "rank2cc/deadline.hpp"
#include "rank2cc/errors.hpp"
#include "rank2cc/finite_field.hpp"
#include "rank2cc/interpolation.hpp"
#include "rank2cc/laurent.hpp"
#include "rank2cc/quiver.hpp"
#include "rank2cc/rank2.hpp"
#include "rank2cc/serialize.hpp"
