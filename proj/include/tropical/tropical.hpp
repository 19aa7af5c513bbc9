#pragma once

#include "tropical/convex.hpp"
#include "tropical/duality.hpp"
#include "tropical/errors.hpp"
#include "tropical/extension.hpp"
#include "tropical/greens.hpp"
#include "tropical/matrix.hpp"
#include "tropical/scalar.hpp"
#include "tropical/text_io.hpp"
