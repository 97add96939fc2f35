#pragma once

#include "reflect3/error.hpp"
#include "reflect3/geom3.hpp"
#include "reflect3/motion.hpp"
#include "reflect3/construct.hpp"
#include "reflect3/classify.hpp"
#include "reflect3/papercase.hpp"
