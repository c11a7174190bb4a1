// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BFM_BFM_H_
#define BFM_BFM_H_

#include "bfm/agent_set.h"
#include "bfm/error.h"
#include "bfm/greedy.h"
#include "bfm/instance.h"
#include "bfm/mechanisms.h"
#include "bfm/oracles.h"
#include "bfm/payments.h"
#include "bfm/rational.h"
#include "bfm/step_function.h"
#include "bfm/valuation.h"
#include "bfm/valuations.h"
#include "bfm/verify.h"

#endif  // BFM_BFM_H_
