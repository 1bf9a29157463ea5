#pragma once

#include "heyting/algebra.hpp"
#include "heyting/blackbox.hpp"
#include "heyting/constructors.hpp"
#include "heyting/enumeration.hpp"
#include "heyting/error.hpp"
#include "heyting/eval.hpp"
#include "heyting/formula.hpp"
#include "heyting/io.hpp"
#include "heyting/ipc.hpp"
#include "heyting/isomorphism.hpp"
#include "heyting/parser.hpp"
#include "heyting/principles.hpp"
#include "heyting/properties.hpp"
#include "heyting/rational.hpp"
#include "heyting/rieger_nishimura.hpp"
#include "heyting/satisfiability.hpp"
#include "heyting/structure.hpp"
#include "heyting/term.hpp"
#include "heyting/topology.hpp"
#include "heyting/verify.hpp"
