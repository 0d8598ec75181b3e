#pragma once

#include "osht/bench.hpp"
#include "osht/errors.hpp"
#include "osht/io.hpp"
#include "osht/legendre.hpp"
#include "osht/multipass.hpp"
#include "osht/parallel.hpp"
#include "osht/sampling.hpp"
#include "osht/sht.hpp"
#include "osht/types.hpp"
