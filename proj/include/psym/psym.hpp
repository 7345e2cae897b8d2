#pragma once

#include "psym/error.hpp"
#include "psym/field.hpp"
#include "psym/laurent.hpp"
#include "psym/algebra.hpp"
#include "psym/forms.hpp"
#include "psym/zerosum.hpp"
#include "psym/valuation.hpp"
#include "psym/parser.hpp"
