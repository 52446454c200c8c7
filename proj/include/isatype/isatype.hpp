#pragma once

#include "isatype/diagnostics.hpp"
#include "isatype/emit.hpp"
#include "isatype/expr.hpp"
#include "isatype/inference.hpp"
#include "isatype/lexer.hpp"
#include "isatype/parser.hpp"
#include "isatype/prelude.hpp"
#include "isatype/solver_registry.hpp"
#include "isatype/substitution.hpp"
#include "isatype/type.hpp"
#include "isatype/type_context.hpp"
#include "isatype/unify.hpp"
