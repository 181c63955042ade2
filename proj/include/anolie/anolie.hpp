#ifndef ANOLIE_ANOLIE_HPP
#define ANOLIE_ANOLIE_HPP

#include "anolie/catalog.hpp"
#include "anolie/certificate.hpp"
#include "anolie/doubling.hpp"
#include "anolie/hyperbolicity.hpp"
#include "anolie/io.hpp"
#include "anolie/lie_algebra.hpp"
#include "anolie/matrix.hpp"
#include "anolie/polynomial.hpp"
#include "anolie/quad_ext.hpp"
#include "anolie/rational.hpp"

#endif  // ANOLIE_ANOLIE_HPP
