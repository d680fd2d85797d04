// Verification conditions: closed implications with provenance.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "rpv/assertions.hpp"

namespace rpv {

struct Provenance {
  std::string rule;      // rule or obligation that produced the VC
  std::string contract;  // contract being checked, if any
  std::string stage;
  SourceLoc loc;
  std::string note;  // short human description

  std::string str() const;
};

struct VC {
  std::string id;  // vc_0001, ... assigned in emission order
  AssnPtr hypothesis;
  AssnPtr conclusion;
  Provenance provenance;
  TypeEnv types;  // every free variable of the implication
  // optional witnesses for existentials in the conclusion (positive
  // positions only); proving the instantiated conclusion proves the VC
  std::map<std::string, ExprPtr> witnesses;

  AssnPtr implication() const { return mk_implies(hypothesis, conclusion); }
};

// Collects VCs in emission order and assigns ids.
class VCSink {
 public:
  VC& add(AssnPtr hypothesis, AssnPtr conclusion, Provenance prov);
  const std::vector<VC>& all() const { return vcs_; }
  std::vector<VC>& all() { return vcs_; }
  size_t size() const { return vcs_.size(); }

 private:
  std::vector<VC> vcs_;
};

}  // namespace rpv
