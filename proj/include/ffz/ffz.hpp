#pragma once

#include "errors.hpp"
#include "fq.hpp"
#include "parse.hpp"
#include "laurent.hpp"
#include "extension.hpp"
#include "zeta.hpp"
#include "witt.hpp"
#include "gassmann.hpp"
#include "demos.hpp"
