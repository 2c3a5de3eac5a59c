// Copyright 2026 The Binder Authors
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

#ifndef BINDER_IO_HPP_
#define BINDER_IO_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "binder/model.hpp"
#include "binder/principles.hpp"
#include "binder/transitivity.hpp"

namespace binder {

// Positioned input error. `code` is machine-readable: E-IO (unreadable
// file), E-EMPTY (empty input), E-PARSE (malformed text, with line/column),
// E-SCHEMA (wrong shape or schema version), E-ENUM (unknown enum token),
// E-VALID (structural discourse violation), E-NOFILES (corpus glob matched
// nothing). `key` points at the offending location for post-parse errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, const std::string& message,
             std::string key = "", int line = 0, int column = 0);

  const std::string& code() const { return code_; }
  const std::string& key() const { return key_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string code_;
  std::string key_;
  int line_ = 0;
  int column_ = 0;
};

// Expected admissible-antecedent block for one anaphor. When `ordered` the
// computed list must match element-wise, otherwise as a set. The exempt and
// reshuffled flags are compared only when present.
struct ExpectedAntec {
  MarkerId anaphor = 0;
  std::vector<MarkerId> antec;
  bool ordered = true;
  std::optional<bool> exempt;
  std::optional<bool> reshuffled;

  bool operator==(const ExpectedAntec&) const = default;
};

// Expected binding lists at one node; absent lists are not compared.
struct ExpectedLists {
  NodeId node = kNoNode;
  std::optional<std::vector<MarkerId>> list_a;
  std::optional<std::vector<MarkerId>> list_z;
  std::optional<std::vector<MarkerId>> list_u;
  std::optional<std::vector<MarkerId>> list_lu;

  bool operator==(const ExpectedLists&) const = default;
};

// One coindexation judgment: whether the given anaphoric link is
// grammatically admissible. Split judgments carry several antecedents.
struct ExpectedJudgment {
  MarkerId anaphor = 0;
  std::vector<MarkerId> antecedents;
  LinkType type = LinkType::kCoreference;
  bool ok = true;

  bool operator==(const ExpectedJudgment&) const = default;
};

// A proposed resolution and, optionally, the violations it must produce.
// Without the expectation, any violation is a failure.
struct ExpectedResolution {
  std::vector<AnaphoricLink> links;
  std::optional<std::vector<std::pair<std::string, MarkerId>>> violations;
};

bool operator==(const AnaphoricLink& a, const AnaphoricLink& b);
bool operator==(const ExpectedResolution& a, const ExpectedResolution& b);

// A pre-annotated discourse file: language, context markers, sentence trees
// and optional expected blocks for corpus testing.
struct Document {
  std::string id;
  LangParams lang;
  bool lang_by_name = true;  // serialized as a bare registry name
  std::vector<Marker> context_markers;
  std::vector<Node> nodes;  // preorder of the sentence trees
  std::vector<NodeId> sentence_roots;
  std::vector<ExpectedAntec> expected_antec;
  std::vector<ExpectedLists> expected_lists;
  std::vector<ExpectedJudgment> expected_judgments;
  std::vector<ExpectedResolution> expected_resolutions;

  bool has_expected() const {
    return !expected_antec.empty() || !expected_lists.empty() ||
           !expected_judgments.empty() || !expected_resolutions.empty();
  }

  bool operator==(const Document&) const = default;
};

// Reads and checks a document file. Throws ParseError.
Document parse_document(const std::string& path);
// Same, over an in-memory buffer; `origin` names the source in messages.
Document parse_document_text(const std::string& text,
                             const std::string& origin = "<memory>");

// Canonical text form; parse_document_text(serialize(doc)) == doc.
std::string serialize(const Document& doc);

// Builds the validated Discourse. Throws ParseError (E-VALID) when the
// structural invariants fail.
Discourse to_discourse(const Document& doc,
                       const std::optional<LangParams>& lang_override =
                           std::nullopt);

struct CheckOptions {
  bool dump_lists = false;
  bool reverse = true;       // antecedent-side constraints E and V
  bool transitivity = true;  // resolution validation
  bool json = true;          // report format: structured or plain text
  std::size_t max_isum = 16;
  std::optional<LangParams> lang_override;
};

// Outcome of checking one document. `exit_code` is 0 when every expected
// block matches, 2 on any mismatch (1 is reserved for input errors, raised
// as ParseError before an outcome exists). `by_principle` tallies expected
// items by the governing constraint (A, Z, B, C, resolution, lists).
struct Tally {
  int checked = 0;
  int failed = 0;
};

struct CheckOutcome {
  int exit_code = 0;
  std::string report;
  std::vector<std::string> mismatches;
  std::map<std::string, Tally> by_principle;
};

CheckOutcome run_check(const Document& doc, const CheckOptions& options);

// How one judgment was decided; `reason` names the failing gate, if any.
struct JudgmentResult {
  bool ok = true;
  std::string reason;
};

// Decides one coindexation judgment against the computed reports: every
// antecedent (construed per the link type: bound picks a quantifier's var,
// e-type its r-mark) must be admissible for the anaphor and pass the number
// gate; exempt reflexives accept any antecedent the number gate allows.
JudgmentResult evaluate_judgment(const ExpectedJudgment& judgment,
                                 const Discourse& d,
                                 const std::vector<AntecReport>& reports,
                                 bool reverse_ran);

// Aggregated corpus run. Files are processed in sorted path order.
struct CorpusOutcome {
  int exit_code = 0;
  std::string summary;
  int files = 0;
  int failed_files = 0;
  std::map<std::string, Tally> by_principle;
  std::map<std::string, Tally> by_language;
};

// Expands the glob pattern (literal paths pass through). Throws ParseError
// E-NOFILES when nothing matches.
std::vector<std::string> expand_glob(const std::string& pattern);

CorpusOutcome run_corpus(const std::vector<std::string>& paths,
                         const CheckOptions& options);
CorpusOutcome run_corpus_glob(const std::string& pattern,
                              const CheckOptions& options);

}  // namespace binder

#endif  // BINDER_IO_HPP_
