#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nsl/orbit.hpp"

namespace nsl::cli {

enum ExitStatus : int {
    kOk = 0,
    kDomainError = 1,
    kParseError = 2,
    kCheckMismatch = 3,
};

struct CommandRequest {
    std::string subcommand; // sgp | ideal | liaison | orbit | classify
    std::string action;     // ideal: colon|dual|kdual|closure|normalize|gens; liaison: principal|canonical|verify-chain
    std::string gens;
    std::vector<std::string> ideals;
    std::vector<std::string> links;
    std::string format = "text";
    std::string ops = "star,kdual";
    std::string family = "any";
    std::size_t cap = kDefaultOrbitCap;
    Int limit = 20;
    bool check = false;
    bool paper_compare = false;
    bool even = false;
    bool raw = false;
};

/// Executes a parsed request, writing results to `out` and diagnostics to
/// `err`. Returns one of ExitStatus.
int run(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nsl::cli
