#pragma once

#include "klreg/errors.hpp"
#include "klreg/ideals.hpp"
#include "klreg/ladder.hpp"
#include "klreg/oracle.hpp"
#include "klreg/perm.hpp"
#include "klreg/pipes.hpp"
#include "klreg/skew.hpp"
#include "klreg/zip.hpp"
