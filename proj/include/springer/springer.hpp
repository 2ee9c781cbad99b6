#pragma once

#include "springer/constructibility.hpp"
#include "springer/diagrams.hpp"
#include "springer/enumerate.hpp"
#include "springer/extint.hpp"
#include "springer/jdt.hpp"
#include "springer/meanders.hpp"
#include "springer/membership.hpp"
#include "springer/oracle.hpp"
#include "springer/tableaux.hpp"
#include "springer/vogan.hpp"
