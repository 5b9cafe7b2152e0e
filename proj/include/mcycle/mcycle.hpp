#pragma once

#include "mcycle/combinatorics.hpp"
#include "mcycle/convert3.hpp"
#include "mcycle/direct.hpp"
#include "mcycle/error.hpp"
#include "mcycle/induct3.hpp"
#include "mcycle/search.hpp"
#include "mcycle/sequence.hpp"
#include "mcycle/sequence_file.hpp"
#include "mcycle/transition.hpp"
#include "mcycle/verify.hpp"
