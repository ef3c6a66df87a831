// include/tame/tame.hpp - everything at once.

#pragma once

#include "tame/block.hpp"
#include "tame/catalog.hpp"
#include "tame/classifier.hpp"
#include "tame/clifford.hpp"
#include "tame/datasets.hpp"
#include "tame/decomp_matrix.hpp"
#include "tame/families.hpp"
#include "tame/integer.hpp"
#include "tame/io.hpp"
#include "tame/partitions.hpp"
#include "tame/polyq.hpp"
