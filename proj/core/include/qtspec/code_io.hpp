/*
   Copyright 2026 The qtspec authors

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

#ifndef QTSPEC_CODE_IO_HPP
#define QTSPEC_CODE_IO_HPP

#include <iosfwd>
#include <string>

#include "qtspec/qt_code.hpp"

namespace qtspec {

/**
 * Parse a line-oriented code description.  '#' starts a comment, blank
 * lines are skipped, and the remaining lines are directives:
 *
 *   q <int>              field size, a prime power
 *   lambda <d0,d1,...>   constashift unit as base-p digits, ascending
 *   m <int>              block length, coprime to the characteristic
 *   ell <int>            index (blocks per codeword)
 *   gen <e> <e> ...      one generator row; each entry is a polynomial
 *                        given as comma-separated coefficient labels,
 *                        ascending degree, each label in [0, q)
 *
 * q, lambda, m and ell must appear exactly once each, in any order; a
 * file with no gen lines describes the zero code.  Entries of degree m
 * or larger are reduced.  Syntax problems throw std::invalid_argument
 * prefixed with "<name>:<line>:"; semantic problems (composite shape,
 * lambda not a unit, m sharing a factor with q) propagate from the code
 * constructor.
 */
QtCode parse_code_stream(std::istream& in, const std::string& name);

/** parse_code_stream over the file's contents; unreadable paths throw
 *  std::runtime_error. */
QtCode parse_code_file(const std::string& path);

} // namespace qtspec

#endif // QTSPEC_CODE_IO_HPP
