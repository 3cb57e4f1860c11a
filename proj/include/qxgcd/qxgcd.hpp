#pragma once

#include "qxgcd/engine.hpp"
#include "qxgcd/errors.hpp"
#include "qxgcd/ideal.hpp"
#include "qxgcd/integer.hpp"
#include "qxgcd/literal.hpp"
#include "qxgcd/oracle.hpp"
#include "qxgcd/qform.hpp"
#include "qxgcd/ring.hpp"
#include "qxgcd/xgcd.hpp"
