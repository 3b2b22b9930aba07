/*
   Copyright 2026 the monoquart authors

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

#ifndef MONOQUART_CLI_HPP
#define MONOQUART_CLI_HPP

#include <string>
#include <vector>

namespace monoquart::cli {

/* dispatches one invocation; args excludes the program name.
   returns 0 on success, 2 when a certificate or classification computed
   fine but the verdict is HYPOTHESES_NOT_MET / NOT_IRREDUCIBLE, and 1
   on usage or internal errors. stdout carries only the report (stable
   bytes for identical args plus seed); diagnostics go to stderr. */
int run(const std::vector<std::string>& args);

}  // namespace monoquart::cli

#endif
