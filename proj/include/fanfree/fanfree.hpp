#pragma once

#include "fanfree/canonical.hpp"
#include "fanfree/constructions.hpp"
#include "fanfree/error.hpp"
#include "fanfree/graph.hpp"
#include "fanfree/graph6.hpp"
#include "fanfree/matching.hpp"
#include "fanfree/rational.hpp"
#include "fanfree/report.hpp"
#include "fanfree/search.hpp"
#include "fanfree/triangles.hpp"
#include "fanfree/vertex_set.hpp"
#include "fanfree/verify.hpp"
#include "fanfree/weights.hpp"
