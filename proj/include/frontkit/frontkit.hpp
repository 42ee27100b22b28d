#pragma once

#include "frontkit/poly.hpp"
#include "frontkit/front.hpp"
#include "frontkit/moves.hpp"
#include "frontkit/rulings.hpp"
#include "frontkit/legskein.hpp"
#include "frontkit/planar.hpp"
#include "frontkit/toposkein.hpp"
#include "frontkit/verify.hpp"
