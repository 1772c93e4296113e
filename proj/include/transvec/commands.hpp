#pragma once

#include <iosfwd>
#include <string>

#include "transvec/report.hpp"

namespace transvec {

struct CommandOptions {
    std::string input;
    std::string domain = "span";   // orbits: span | all | coset:VEC
    std::string vector;            // classify / d / coset / blocks
    bool oracle = false;           // d: also run the search oracle
    std::string method = "brute";  // v000: brute | subgraphs
    std::string level = "quick";   // verify: quick | full
    bool json = false;
};

// Executes one of the commands (orbits, classify, recognize, d, v000, coset,
// blocks, verify, fixtures) and renders its report to `out`. Returns the
// process exit status: 0 success, 1 when a verification check failed, 2 for
// usage or input errors (message on `err`).
int run_command(const std::string& name, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);

}  // namespace transvec
