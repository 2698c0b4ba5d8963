// Copyright 2026 The QRS Authors
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

#include "qrs/errors.h"

#include <sstream>

namespace qrs {
namespace {

std::string FormatBracket(const std::string& what, double lo, double hi,
                          double f_lo, double f_hi) {
  std::ostringstream os;
  os.precision(17);
  os << what << " [lo=" << lo << ", hi=" << hi << ", f(lo)=" << f_lo
     << ", f(hi)=" << f_hi << "]";
  return os.str();
}

}  // namespace

BracketError::BracketError(const std::string& what, double lo, double hi,
                           double f_lo, double f_hi)
    : std::runtime_error(FormatBracket(what, lo, hi, f_lo, f_hi)),
      lo_(lo),
      hi_(hi),
      f_lo_(f_lo),
      f_hi_(f_hi) {}

}  // namespace qrs
