// cubenc: deterministic cubic-radical encodings onto plane cubic curves,
// line-family certification, and the flex-tangent geometry checks backing it.
// Copyright 2026 The cubenc Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cubenc/cubic.hpp>
#include <cubenc/curves.hpp>
#include <cubenc/families.hpp>
#include <cubenc/field.hpp>
#include <cubenc/flexes.hpp>
#include <cubenc/io.hpp>
#include <cubenc/poly.hpp>
#include <cubenc/trivariate.hpp>
