#pragma once

#include "peano/ordinal.hpp"
#include "peano/element.hpp"
#include "peano/model.hpp"
#include "peano/evidence.hpp"
#include "peano/builtin_models.hpp"
#include "peano/principles.hpp"
#include "peano/finite_oracle.hpp"
#include "peano/implication.hpp"
#include "peano/dsl/expr.hpp"
#include "peano/dsl/ast.hpp"
#include "peano/dsl/parser.hpp"
#include "peano/dsl/printer.hpp"
#include "peano/dsl/compile.hpp"
