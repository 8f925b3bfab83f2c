#pragma once

#include "weylcat/affine.hpp"
#include "weylcat/affine_permutation.hpp"
#include "weylcat/anderson.hpp"
#include "weylcat/cartan.hpp"
#include "weylcat/gmv.hpp"
#include "weylcat/io.hpp"
#include "weylcat/park.hpp"
#include "weylcat/paths.hpp"
#include "weylcat/render.hpp"
#include "weylcat/root_system.hpp"
#include "weylcat/shi.hpp"
#include "weylcat/torus.hpp"
#include "weylcat/util.hpp"
#include "weylcat/weyl.hpp"
