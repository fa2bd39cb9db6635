#ifndef BLALG_HPP
#define BLALG_HPP

#include "blalg/algebra.hpp"
#include "blalg/comet.hpp"
#include "blalg/constructors.hpp"
#include "blalg/enumeration.hpp"
#include "blalg/errors.hpp"
#include "blalg/mv_crypt.hpp"
#include "blalg/quotient_ring.hpp"
#include "blalg/serialize.hpp"
#include "blalg/zp_poly.hpp"

#endif  // BLALG_HPP
