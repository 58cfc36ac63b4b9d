#ifndef SANDWICH_SANDWICH_HPP_
#define SANDWICH_SANDWICH_HPP_

#include "bignat.hpp"
#include "combinatorics.hpp"
#include "eggbox.hpp"
#include "engine.hpp"
#include "ideals.hpp"
#include "idemgen.hpp"
#include "regular.hpp"
#include "sandwich_element.hpp"
#include "transformation.hpp"
#include "variant.hpp"
#include "verify.hpp"

#endif  // SANDWICH_SANDWICH_HPP_
