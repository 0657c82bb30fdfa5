#pragma once

// Everything except manifest.hpp, which needs OpenSSL.

#include "sdcode/circulant.hpp"
#include "sdcode/circulant_classify.hpp"
#include "sdcode/code.hpp"
#include "sdcode/enumerate.hpp"
#include "sdcode/equivalence.hpp"
#include "sdcode/errors.hpp"
#include "sdcode/families.hpp"
#include "sdcode/gf2.hpp"
#include "sdcode/io.hpp"
#include "sdcode/neighbors.hpp"
#include "sdcode/paper_data.hpp"
#include "sdcode/parallel.hpp"
#include "sdcode/reproduce.hpp"
#include "sdcode/weights.hpp"
