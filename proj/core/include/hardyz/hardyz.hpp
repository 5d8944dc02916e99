#pragma once

#include "hardyz/arithmetic.hpp"
#include "hardyz/convolution.hpp"
#include "hardyz/davenport_heilbronn.hpp"
#include "hardyz/error.hpp"
#include "hardyz/gelfand_shilov.hpp"
#include "hardyz/moments.hpp"
#include "hardyz/numfmt.hpp"
#include "hardyz/parallel.hpp"
#include "hardyz/quadrature.hpp"
#include "hardyz/special_fns.hpp"
#include "hardyz/zero_machinery.hpp"
#include "hardyz/zeta_eval.hpp"
