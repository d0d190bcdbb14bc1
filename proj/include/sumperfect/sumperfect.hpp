#pragma once

#include "sumperfect/family.hpp"
#include "sumperfect/graph.hpp"
#include "sumperfect/invariants.hpp"
#include "sumperfect/io.hpp"
#include "sumperfect/isomorphism.hpp"
#include "sumperfect/miner.hpp"
#include "sumperfect/recognition.hpp"
#include "sumperfect/serialization.hpp"
#include "sumperfect/vertex_set.hpp"
