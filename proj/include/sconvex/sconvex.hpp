#pragma once

// Convenience header pulling in the whole library.

#include "sconvex/approx.hpp"
#include "sconvex/generators.hpp"
#include "sconvex/io.hpp"
#include "sconvex/metrics.hpp"
#include "sconvex/render.hpp"
