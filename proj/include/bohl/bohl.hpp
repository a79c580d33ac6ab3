// Copyright 2026 The bohl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BOHL_BOHL_HPP
#define BOHL_BOHL_HPP

#include "bohl/config.hpp"
#include "bohl/counter.hpp"
#include "bohl/errors.hpp"
#include "bohl/oracle.hpp"
#include "bohl/region.hpp"
#include "bohl/serialize.hpp"
#include "bohl/tolerances.hpp"
#include "bohl/triangle.hpp"
#include "bohl/trinomial.hpp"
#include "bohl/verify.hpp"

#endif  // BOHL_BOHL_HPP
