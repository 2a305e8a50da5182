#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with string streams.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/predicates.hpp"
#include "ringlab/verifier.hpp"

namespace ringlab::cli {

enum ExitCode : int { ok = 0, mismatch = 1, parse_error = 2, resource_limit = 3, usage_error = 4 };

using Json = nlohmann::ordered_json;

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Report builders, shared with the tests.
Json check_json(const PropertyReport& report, bool timing);
Json suites_json(const std::vector<SuiteResult>& results, bool timing);
Json search_json(const std::vector<Property>& require, const std::vector<Property>& forbid, const SearchResult& r);
Json implication_json(const ImplicationReport& rep);

std::string check_text(const PropertyReport& report, bool timing);
std::string check_markdown(const PropertyReport& report);
std::string suites_text(const std::vector<SuiteResult>& results, bool timing);
std::string suites_markdown(const std::vector<SuiteResult>& results);
std::string implication_text(const ImplicationReport& rep);
std::string implication_markdown(const ImplicationReport& rep);

}  // namespace ringlab::cli
