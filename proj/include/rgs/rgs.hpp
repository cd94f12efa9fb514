#pragma once

// Umbrella header.

#include "rgs/analysis.hpp"
#include "rgs/gen_prefix.hpp"
#include "rgs/gen_suffix.hpp"
#include "rgs/oracle.hpp"
#include "rgs/orders.hpp"
#include "rgs/sequence.hpp"
#include "rgs/suffix.hpp"
#include "rgs/tree.hpp"
