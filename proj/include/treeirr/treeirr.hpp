#pragma once

#include "treeirr/errors.hpp"
#include "treeirr/tree.hpp"
#include "treeirr/indices.hpp"
#include "treeirr/degree_sequence.hpp"
#include "treeirr/enumeration.hpp"
#include "treeirr/formulas.hpp"
#include "treeirr/extremal.hpp"
#include "treeirr/fixtures.hpp"
#include "treeirr/claims.hpp"
#include "treeirr/edge_list.hpp"
#include "treeirr/report_io.hpp"
