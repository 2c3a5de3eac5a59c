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
//
// binder: command-line front end for the binding-constraints engine.
//
//   binder check <file>       check one document and print its report
//   binder corpus <glob...>   run every matching document, print a summary
//   binder validate <file>    parse + validate, print the canonical form
//
// Exit codes: 0 pass, 1 input error, 2 expectation mismatch.

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "binder/io.hpp"
#include "binder/model.hpp"

namespace {

struct CommonFlags {
  std::string lang;
  bool dump_lists = false;
  bool no_reverse = false;
  bool no_transitivity = false;
  std::string format = "json";
  std::size_t max_isum = 16;
};

void add_common_flags(CLI::App* cmd, CommonFlags* f) {
  cmd->add_option("--lang", f->lang,
                  "Override the document language: a registry name "
                  "(english, portuguese, icelandic, greek, german, "
                  "norwegian, toba-batak) or a JSON parameter file");
  cmd->add_flag("--dump-lists", f->dump_lists,
                "Include every node's binding lists in the report");
  cmd->add_flag("--no-reverse", f->no_reverse,
                "Disable the antecedent-side constraints (E/V filtering)");
  cmd->add_flag("--no-transitivity", f->no_transitivity,
                "Disable resolution validation");
  cmd->add_option("--format", f->format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-isum", f->max_isum,
                  "Cap on split-antecedent pluralisation");
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

// A language parameter file is a JSON object {"name", "locality",
// "reshuffle"}; every field is optional except name.
binder::LangParams lang_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw binder::ParseError("E-IO", "cannot read language file " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw binder::ParseError("E-PARSE", e.what(), path);
  }
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
    throw binder::ParseError(
        "E-SCHEMA", "language file must be an object with a name", path);
  }
  binder::LangParams p;
  p.name = j["name"].get<std::string>();
  if (std::optional<binder::LangParams> known =
          binder::lookup_language(p.name)) {
    p = *known;  // start from the registry entry, then override
  }
  if (j.contains("locality")) {
    const std::string s = j["locality"].get<std::string>();
    if (s == "immediate") {
      p.locality_mode = binder::LocalityMode::kImmediate;
    } else if (s == "first-finite") {
      p.locality_mode = binder::LocalityMode::kFirstFinite;
    } else if (s == "first-indicative") {
      p.locality_mode = binder::LocalityMode::kFirstIndicative;
    } else if (s == "upstairs") {
      p.locality_mode = binder::LocalityMode::kUpstairs;
    } else {
      throw binder::ParseError("E-ENUM", "unknown locality mode " + s, path);
    }
  }
  if (j.contains("reshuffle")) {
    const std::string s = j["reshuffle"].get<std::string>();
    if (s == "none") {
      p.reshuffle = binder::ReshuffleMode::kNone;
    } else if (s == "upstairs") {
      p.reshuffle = binder::ReshuffleMode::kUpstairs;
    } else {
      throw binder::ParseError("E-ENUM", "unknown reshuffle mode " + s, path);
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "name" && it.key() != "locality" &&
        it.key() != "reshuffle") {
      throw binder::ParseError("E-SCHEMA",
                               "unknown language key " + it.key(), path);
    }
  }
  return p;
}

std::optional<binder::LangParams> resolve_lang(const std::string& arg) {
  if (arg.empty()) return std::nullopt;
  if (std::optional<binder::LangParams> known = binder::lookup_language(arg)) {
    return known;
  }
  if (file_exists(arg)) return lang_from_file(arg);
  throw binder::ParseError("E-ENUM",
                           "unknown language (not a registry name and not a "
                           "readable file): " + arg);
}

binder::CheckOptions to_options(const CommonFlags& f) {
  binder::CheckOptions o;
  o.dump_lists = f.dump_lists;
  o.reverse = !f.no_reverse;
  o.transitivity = !f.no_transitivity;
  o.json = f.format == "json";
  o.max_isum = f.max_isum;
  o.lang_override = resolve_lang(f.lang);
  return o;
}

int run_check_cmd(const std::string& path, const CommonFlags& flags) {
  binder::CheckOptions options = to_options(flags);
  binder::Document doc = binder::parse_document(path);
  binder::CheckOutcome out = binder::run_check(doc, options);
  std::cout << out.report;
  return out.exit_code;
}

int run_corpus_cmd(const std::vector<std::string>& patterns,
                   const CommonFlags& flags) {
  binder::CheckOptions options = to_options(flags);
  std::vector<std::string> paths;
  for (const std::string& pattern : patterns) {
    std::vector<std::string> expanded = binder::expand_glob(pattern);
    paths.insert(paths.end(), expanded.begin(), expanded.end());
  }
  binder::CorpusOutcome out = binder::run_corpus(paths, options);
  std::cout << out.summary;
  return out.exit_code;
}

int run_validate_cmd(const std::string& path) {
  binder::Document doc = binder::parse_document(path);
  binder::to_discourse(doc);  // throws E-VALID on structural violations
  std::cout << binder::serialize(doc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binding-constraints engine: admissible-antecedent "
               "computation over annotated discourses"};
  app.require_subcommand(1);

  std::string check_path;
  CommonFlags check_flags;
  CLI::App* check = app.add_subcommand(
      "check", "Check one document and print its report");
  check->add_option("file", check_path, "Document file")->required();
  add_common_flags(check, &check_flags);

  std::vector<std::string> corpus_patterns;
  CommonFlags corpus_flags;
  CLI::App* corpus = app.add_subcommand(
      "corpus", "Run every matching document and print a summary");
  corpus->add_option("glob", corpus_patterns, "File paths or glob patterns")
      ->required();
  add_common_flags(corpus, &corpus_flags);

  std::string validate_path;
  CLI::App* validate = app.add_subcommand(
      "validate", "Parse and validate a document, print the canonical form");
  validate->add_option("file", validate_path, "Document file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check_cmd(check_path, check_flags);
    if (corpus->parsed()) return run_corpus_cmd(corpus_patterns, corpus_flags);
    if (validate->parsed()) return run_validate_cmd(validate_path);
  } catch (const binder::ParseError& e) {
    std::cerr << "binder: " << e.code() << ": " << e.what();
    if (!e.key().empty()) {
      std::cerr << " [" << e.key();
      if (e.line() > 0) std::cerr << ":" << e.line() << ":" << e.column();
      std::cerr << "]";
    }
    std::cerr << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "binder: error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
