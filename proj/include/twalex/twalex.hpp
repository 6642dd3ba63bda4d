#pragma once

#include "twalex/abelianization.hpp"
#include "twalex/certify.hpp"
#include "twalex/covers.hpp"
#include "twalex/errors.hpp"
#include "twalex/fox.hpp"
#include "twalex/integer.hpp"
#include "twalex/laurent_matrix.hpp"
#include "twalex/laurent_poly.hpp"
#include "twalex/periodic.hpp"
#include "twalex/perm_rep.hpp"
#include "twalex/permutation.hpp"
#include "twalex/presentation.hpp"
#include "twalex/smith.hpp"
#include "twalex/twisted.hpp"
#include "twalex/word.hpp"
