#pragma once

// Umbrella header: exact verification kit for Z2-graded Hom-algebras over
// the rational-function field Q(p).

#include "homsuper/algebra.hpp"
#include "homsuper/bigint.hpp"
#include "homsuper/errors.hpp"
#include "homsuper/grading.hpp"
#include "homsuper/sigma_bracket.hpp"
#include "homsuper/identities.hpp"
#include "homsuper/laurent.hpp"
#include "homsuper/lg.hpp"
#include "homsuper/parse.hpp"
#include "homsuper/perm.hpp"
#include "homsuper/qwitt.hpp"
#include "homsuper/rational.hpp"
#include "homsuper/report.hpp"
#include "homsuper/scalar.hpp"
#include "homsuper/serialize.hpp"
#include "homsuper/twist.hpp"
#include "homsuper/version.hpp"
