#ifndef SKEIN_SKEIN_HPP
#define SKEIN_SKEIN_HPP

#include "field.hpp"
#include "laurent.hpp"
#include "skein_element.hpp"
#include "relators.hpp"
#include "reduction.hpp"
#include "witness.hpp"
#include "torsion.hpp"
#include "obstruction.hpp"
#include "verify.hpp"

#endif
