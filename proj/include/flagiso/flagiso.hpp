// Copyright 2026 The flagiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLAGISO_FLAGISO_HPP
#define FLAGISO_FLAGISO_HPP

#include "flagiso/algebra.hpp"
#include "flagiso/classify.hpp"
#include "flagiso/cocycle.hpp"
#include "flagiso/division.hpp"
#include "flagiso/equiv.hpp"
#include "flagiso/error.hpp"
#include "flagiso/group.hpp"
#include "flagiso/iso.hpp"
#include "flagiso/presentation.hpp"
#include "flagiso/verdict.hpp"
#include "flagiso/witness.hpp"

#endif  // FLAGISO_FLAGISO_HPP
