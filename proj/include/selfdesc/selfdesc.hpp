#pragma once

#include "selfdesc/analysis.hpp"
#include "selfdesc/blocks.hpp"
#include "selfdesc/director.hpp"
#include "selfdesc/format.hpp"
#include "selfdesc/generator.hpp"
#include "selfdesc/oracle.hpp"
#include "selfdesc/rational.hpp"
#include "selfdesc/spectral.hpp"
