// Copyright 2026 The qveto Authors
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


#ifndef QVETO_QCORE_HPP
#define QVETO_QCORE_HPP

#include "qveto/qcore/distribution.hpp"
#include "qveto/qcore/errors.hpp"
#include "qveto/qcore/fidelity.hpp"
#include "qveto/qcore/gate.hpp"
#include "qveto/qcore/state.hpp"
#include "qveto/qcore/types.hpp"

#endif  // QVETO_QCORE_HPP
