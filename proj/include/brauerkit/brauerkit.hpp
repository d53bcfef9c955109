#pragma once

#include "brauerkit/error.hpp"
#include "brauerkit/permutation.hpp"
#include "brauerkit/group.hpp"
#include "brauerkit/lattice.hpp"
#include "brauerkit/marks.hpp"
#include "brauerkit/group_info.hpp"
#include "brauerkit/quotient.hpp"
#include "brauerkit/int_matrix.hpp"
#include "brauerkit/normal_form.hpp"
#include "brauerkit/group_classes.hpp"
#include "brauerkit/burnside.hpp"
#include "brauerkit/brauer_relations.hpp"
#include "brauerkit/prim_quotient.hpp"
#include "brauerkit/mackey_axioms.hpp"
#include "brauerkit/group_spec.hpp"
#include "brauerkit/json_io.hpp"
