#pragma once

#include "weyl/calculus.hpp"
#include "weyl/commutator.hpp"
#include "weyl/context.hpp"
#include "weyl/cseries.hpp"
#include "weyl/element.hpp"
#include "weyl/errors.hpp"
#include "weyl/normal_order.hpp"
#include "weyl/parse.hpp"
#include "weyl/poly_rep.hpp"
#include "weyl/random_gen.hpp"
#include "weyl/rational.hpp"
#include "weyl/verify.hpp"
#include "weyl/word.hpp"
