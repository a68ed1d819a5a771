#pragma once

#include "tjurina/ring.hpp"
#include "tjurina/poly.hpp"
#include "tjurina/parse.hpp"
#include "tjurina/standard_basis.hpp"
#include "tjurina/ideal.hpp"
#include "tjurina/tjurina_ops.hpp"
#include "tjurina/t_dependence.hpp"
#include "tjurina/decision.hpp"
#include "tjurina/report_json.hpp"
#include "tjurina/cas_script.hpp"
