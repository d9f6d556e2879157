/*
   Copyright 2026 The mdcc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MDCC_MDCC_HPP
#define MDCC_MDCC_HPP

#include "complexes.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "groebner.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "module.hpp"
#include "monomial.hpp"
#include "observability.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "text.hpp"

#endif
