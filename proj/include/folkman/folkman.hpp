#pragma once

#include "folkman/arrowing.hpp"
#include "folkman/bounds.hpp"
#include "folkman/clique.hpp"
#include "folkman/errors.hpp"
#include "folkman/graph.hpp"
#include "folkman/graph_io.hpp"
#include "folkman/known_values.hpp"
#include "folkman/signature.hpp"
#include "folkman/vertex_set.hpp"
#include "folkman/witness.hpp"
