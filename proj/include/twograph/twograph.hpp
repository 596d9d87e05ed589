#pragma once

#include "combinatorics.hpp"
#include "seidel.hpp"
#include "two_graph.hpp"
#include "catalog.hpp"
#include "e7.hpp"
#include "classifier.hpp"
#include "io.hpp"
