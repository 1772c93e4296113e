#pragma once

#include <string>
#include <vector>

#include "transvec/formdoc.hpp"

namespace transvec {

// Built-in documents. Parametrized families take their parameters after a
// colon: `dmk:M,K`, `janssen-a:N,P`, `janssen-b:N,P`, `janssen-c:N,P`,
// `cycle:R`. The two worked figures are stored literally as `fig-ex` and
// `fig-exx`, and `e6` is the six-vertex fork.
std::vector<std::string> fixture_names();
bool is_fixture_name(const std::string& name);
std::string fixture_document(const std::string& name);  // throws ParseError

// Fixture text when `input` names one, otherwise the contents of the file at
// that path.
std::string load_input(const std::string& input);

}  // namespace transvec
