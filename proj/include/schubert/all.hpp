#pragma once

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"
#include "schubert/io.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/schubert.hpp"
#include "schubert/transition.hpp"
#include "schubert/verify.hpp"
#include "schubert/words.hpp"
