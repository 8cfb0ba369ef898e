#pragma once

#include "matchkit/containment.hpp"
#include "matchkit/dyck_word.hpp"
#include "matchkit/error.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/prefix_graph.hpp"
