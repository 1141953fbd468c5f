#pragma once

#include "domcyc/canonical.hpp"
#include "domcyc/closure.hpp"
#include "domcyc/connectivity.hpp"
#include "domcyc/cycles.hpp"
#include "domcyc/enumerate.hpp"
#include "domcyc/errors.hpp"
#include "domcyc/graph.hpp"
#include "domcyc/graph6.hpp"
#include "domcyc/iso.hpp"
#include "domcyc/verify.hpp"
#include "domcyc/vertex_set.hpp"
#include "domcyc/zoo.hpp"
