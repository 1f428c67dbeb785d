#pragma once

#include "primerec/bench.hpp"
#include "primerec/core_formula.hpp"
#include "primerec/error.hpp"
#include "primerec/nat.hpp"
#include "primerec/next_prime.hpp"
#include "primerec/op_counter.hpp"
#include "primerec/oracle.hpp"
#include "primerec/strategies.hpp"
#include "primerec/strategy.hpp"
#include "primerec/verify.hpp"
