#pragma once

#include "matchkit/core.hpp"
#include "matchkit/dyckbij.hpp"
#include "matchkit/enumeration.hpp"
#include "matchkit/ferrers.hpp"
#include "matchkit/gentree.hpp"
#include "matchkit/io.hpp"
#include "matchkit/limits.hpp"
#include "matchkit/pattern_spec.hpp"
#include "matchkit/render.hpp"
#include "matchkit/verify.hpp"
