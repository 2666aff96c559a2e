#pragma once

#include "ciso/canonical.hpp"
#include "ciso/constructive.hpp"
#include "ciso/cycles.hpp"
#include "ciso/extremal.hpp"
#include "ciso/graph.hpp"
#include "ciso/graph6.hpp"
#include "ciso/isolation.hpp"
#include "ciso/rational.hpp"
#include "ciso/report.hpp"
#include "ciso/survey.hpp"
#include "ciso/trees.hpp"
#include "ciso/vertex_set.hpp"
