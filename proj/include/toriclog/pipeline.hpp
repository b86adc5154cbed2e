#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclog/serialization.hpp"

namespace toriclog {

struct PipelineOptions {
  bool lemma1 = true;
  bool cocycle = true;
  bool connection = true;
  bool prop3 = true;
};

// "lemma1,cocycle,connection,prop3" (any subset); ParseError on unknown names.
PipelineOptions parse_check_groups(const std::string& list);

struct SectionResult {
  std::string name;
  bool ran = false;
  std::vector<std::string> failures;
  OrderedJson detail = OrderedJson::object();

  bool pass() const { return failures.empty(); }
};

struct VerificationReport {
  std::string fan_label;
  std::string bundle_label;
  // fan_validation, lemma1, decomposition, cocycle, connection, residues, prop3
  std::vector<SectionResult> sections;
  // A domain error that stopped the pipeline.
  std::optional<ErrorKind> error;
  std::string error_stage;
  std::string error_message;

  bool pass() const;
  const SectionResult* section(const std::string& name) const;
  OrderedJson to_json() const;
  std::string to_text() const;
};

VerificationReport run_pipeline(const Fan& fan, const BundleSpec& bundle, const PipelineOptions& options,
                                const std::string& fan_label = "", const std::string& bundle_label = "");

void apply_perturbation(Cocycle& cocycle, const CocyclePerturbation& p);

// 0 pass, 1 verification failure, 3 parse error, 4 fan validation,
// 5 invalid bundle data, 6 incompatible filtrations, 7 any other error.
// Usage errors (2) are decided by the CLI.
int exit_code(ErrorKind kind);
int exit_code(const VerificationReport& report);

}  // namespace toriclog
