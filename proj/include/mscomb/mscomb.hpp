#pragma once

#include "core.hpp"
#include "counting.hpp"
#include "engine.hpp"
#include "inplace.hpp"
#include "reference.hpp"
#include "treemodel.hpp"
