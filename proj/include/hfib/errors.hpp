// Copyright 2026 The hfib Authors
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

#ifndef HFIB_ERRORS_HPP_
#define HFIB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace hfib {

// Every library error derives from Error so callers can catch the family.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HFIB_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

HFIB_DEFINE_ERROR(NotDivisible);
HFIB_DEFINE_ERROR(DivisorZero);
HFIB_DEFINE_ERROR(ModulusMismatch);
HFIB_DEFINE_ERROR(TableMismatch);
HFIB_DEFINE_ERROR(NotUnital);
HFIB_DEFINE_ERROR(UnknownKind);
HFIB_DEFINE_ERROR(NonRealResult);
HFIB_DEFINE_ERROR(ZeroH);
HFIB_DEFINE_ERROR(IndexConstraintViolated);
HFIB_DEFINE_ERROR(DomainError);
HFIB_DEFINE_ERROR(ParseError);

#undef HFIB_DEFINE_ERROR

}  // namespace hfib

#endif  // HFIB_ERRORS_HPP_
