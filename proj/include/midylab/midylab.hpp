#pragma once

#include "midylab/arith.hpp"
#include "midylab/errors.hpp"
#include "midylab/expansion.hpp"
#include "midylab/jenkins.hpp"
#include "midylab/midy.hpp"
#include "midylab/natural.hpp"
#include "midylab/order.hpp"
#include "midylab/progression.hpp"
#include "midylab/verdict.hpp"
