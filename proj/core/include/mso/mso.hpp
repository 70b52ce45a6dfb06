#pragma once

#include "mso/canonical.hpp"
#include "mso/error.hpp"
#include "mso/exact.hpp"
#include "mso/families.hpp"
#include "mso/graph.hpp"
#include "mso/profile_cache.hpp"
#include "mso/search.hpp"
#include "mso/serialize.hpp"
#include "mso/subtree.hpp"
#include "mso/trends.hpp"
