// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "vsv/checker.hpp"
#include "vsv/ctl.hpp"
#include "vsv/error.hpp"
#include "vsv/graph.hpp"
#include "vsv/ir.hpp"
#include "vsv/nusmv.hpp"
#include "vsv/optimizer.hpp"
#include "vsv/pipeline.hpp"
#include "vsv/rules.hpp"
#include "vsv/semantics.hpp"
#include "vsv/smv.hpp"
#include "vsv/system_io.hpp"
#include "vsv/trace.hpp"
#include "vsv/translator.hpp"
#include "vsv/validate.hpp"
