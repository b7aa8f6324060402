#pragma once

#include "core.hpp"
#include "random.hpp"
#include "report.hpp"
#include "tnorm.hpp"
#include "capacity.hpp"
#include "integral.hpp"
#include "comonotone.hpp"
#include "functional.hpp"
#include "characterize.hpp"
#include "extension.hpp"
#include "io.hpp"
