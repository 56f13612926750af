#pragma once

#include "dgpic/aut_group.hpp"
#include "dgpic/dga.hpp"
#include "dgpic/error.hpp"
#include "dgpic/ext_algebra.hpp"
#include "dgpic/linalg.hpp"
#include "dgpic/ncpoly.hpp"
#include "dgpic/oracle.hpp"
#include "dgpic/oracle_bridge.hpp"
#include "dgpic/param_poly.hpp"
#include "dgpic/pipeline.hpp"
#include "dgpic/presentation.hpp"
#include "dgpic/report.hpp"
#include "dgpic/resolution.hpp"
#include "dgpic/scalar.hpp"
