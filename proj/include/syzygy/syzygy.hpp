#pragma once

#include "syzygy/betti.hpp"
#include "syzygy/cache.hpp"
#include "syzygy/errors.hpp"
#include "syzygy/exactla.hpp"
#include "syzygy/io.hpp"
#include "syzygy/koszul.hpp"
#include "syzygy/theory.hpp"
#include "syzygy/variety.hpp"
#include "syzygy/version.hpp"
