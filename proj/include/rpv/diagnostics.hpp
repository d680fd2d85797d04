// Source locations and diagnostic errors shared by all front-end passes.
#pragma once

#include <stdexcept>
#include <string>

namespace rpv {

struct SourceLoc {
  int line = 0;  // 1-based; 0 means "no location"
  int col = 0;
  std::string file;

  std::string str() const {
    if (line == 0) return file.empty() ? "<unknown>" : file;
    return (file.empty() ? std::string("<input>") : file) + ":" +
           std::to_string(line) + ":" + std::to_string(col);
  }
};

// Base for all toolkit errors carrying a source position.
struct Error : std::runtime_error {
  SourceLoc loc;
  Error(const SourceLoc& l, const std::string& msg)
      : std::runtime_error(l.str() + ": " + msg), loc(l) {}
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  using Error::Error;
};

struct TypeError : Error {
  using Error::Error;
};

struct MacroError : Error {
  using Error::Error;
};

struct SubstError : Error {
  using Error::Error;
};

// Proof-checking failures name the rule or side condition that broke.
struct SchemaError : Error {
  using Error::Error;
};

struct SideConditionError : Error {
  std::string condition;  // machine-readable tag, e.g. "BLOCK_FRESHNESS"
  SideConditionError(const std::string& cond, const SourceLoc& l, const std::string& msg)
      : Error(l, "[" + cond + "] " + msg), condition(cond) {}
  SideConditionError(const std::string& cond, const std::string& msg)
      : Error("[" + cond + "] " + msg), condition(cond) {}
};

struct MissingAnnotation : Error {
  using Error::Error;
};

struct ContractNotInContext : Error {
  using Error::Error;
};

struct CycleError : Error {
  using Error::Error;
};

struct EmitError : Error {
  using Error::Error;
};

struct UnknownEntry : Error {
  using Error::Error;
};

}  // namespace rpv
