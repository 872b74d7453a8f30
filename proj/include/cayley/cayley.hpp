#pragma once

#include "cayley/error.hpp"
#include "cayley/kernel.hpp"
#include "cayley/invariants.hpp"
#include "cayley/table_io.hpp"
#include "cayley/catalog.hpp"
#include "cayley/bounds.hpp"
#include "cayley/isoclinism.hpp"
#include "cayley/report.hpp"
