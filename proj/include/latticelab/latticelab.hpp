#ifndef LATTICELAB_LATTICELAB_HPP
#define LATTICELAB_LATTICELAB_HPP

#include "catalog.hpp"
#include "comaximal.hpp"
#include "constructors.hpp"
#include "enforcing.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "permutation.hpp"
#include "properties.hpp"

#endif // LATTICELAB_LATTICELAB_HPP
