#pragma once

#include "characterizations.hpp"
#include "classes.hpp"
#include "error.hpp"
#include "graphs.hpp"
#include "moves.hpp"
#include "permutation.hpp"
#include "reduced_words.hpp"
#include "scan.hpp"
#include "serialize.hpp"
#include "weak_order.hpp"
