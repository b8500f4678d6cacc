#pragma once

#include "ergolab/bitvec.hpp"
#include "ergolab/cobound.hpp"
#include "ergolab/cohomo2d.hpp"
#include "ergolab/dynsys.hpp"
#include "ergolab/gf2.hpp"
#include "ergolab/induced.hpp"
#include "ergolab/msets.hpp"
#include "ergolab/random.hpp"
#include "ergolab/serialize.hpp"
#include "ergolab/spectral.hpp"
#include "ergolab/stats.hpp"
#include "ergolab/version.hpp"
