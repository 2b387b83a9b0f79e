#pragma once

#include "nilcert/error.hpp"
#include "nilcert/gallery.hpp"
#include "nilcert/generators.hpp"
#include "nilcert/matrix.hpp"
#include "nilcert/nilpotency.hpp"
#include "nilcert/random.hpp"
#include "nilcert/spectral.hpp"
#include "nilcert/theorems.hpp"
#include "nilcert/volterra.hpp"
