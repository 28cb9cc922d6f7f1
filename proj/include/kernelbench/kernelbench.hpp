// Copyright 2026 The kernelbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "kernelbench/clock.hpp"
#include "kernelbench/detectors.hpp"
#include "kernelbench/error.hpp"
#include "kernelbench/image.hpp"
#include "kernelbench/io.hpp"
#include "kernelbench/kernel.hpp"
#include "kernelbench/pipeline.hpp"
#include "kernelbench/pnm.hpp"
#include "kernelbench/scenarios.hpp"
#include "kernelbench/shadergen.hpp"
