#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fsplit/polynomial.hpp"

namespace fsplit::cli {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// A malformed corpus case or command line (exit code 2).
class UsageError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "UsageError"; }
};

struct CheckResult {
    std::string kind;
    json verdict;
    json expected;  // null when the case states no expectation
    bool pass = false;
    json certificate;  // null when there is none
};

struct CaseReport {
    std::string name;
    std::uint32_t prime = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

// Runs every check of one corpus case. Module errors are recorded as the
// verdict "error:<Kind>"; malformed cases and unparsable expressions throw
// UsageError or ParseError.
CaseReport run_case(const json& case_json);

struct CorpusReport {
    std::vector<CaseReport> cases;
    bool all_pass() const;
};

// Document shape: {"schema": 1, "cases": [case, ...]}.
CorpusReport run_corpus(const json& document);

json to_json(const CaseReport& report);
json to_json(const CorpusReport& report);
// One line per check, each optionally followed by its certificate.
std::string to_text(const CaseReport& report, bool with_certificates = false);
std::string to_text(const CorpusReport& report, bool with_certificates = false);

// `expected` matches `actual` when equal, or, for objects, when every key
// of `expected` matches the same key of `actual`.
bool matches(const json& expected, const json& actual);

// Canonical rendering cut after `max_terms` terms with a count of the rest.
std::string render_truncated(const Polynomial& f, std::size_t max_terms = 40);

}  // namespace fsplit::cli
