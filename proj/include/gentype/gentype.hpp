#ifndef GENTYPE_GENTYPE_HPP
#define GENTYPE_GENTYPE_HPP

#include "centralizer.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "field.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "types.hpp"

#endif  // GENTYPE_GENTYPE_HPP
