#pragma once

#include "ribbon/code.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/error.hpp"
#include "ribbon/fox.hpp"
#include "ribbon/laurent.hpp"
#include "ribbon/obstruction.hpp"
#include "ribbon/serialize.hpp"
#include "ribbon/spectrum.hpp"
