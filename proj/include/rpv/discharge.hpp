// Bounded finite-domain discharge of verification conditions with
// counterexample search.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rpv/assert_eval.hpp"
#include "rpv/state.hpp"
#include "rpv/vc.hpp"

namespace rpv {

struct DomainConfig {
  long long int_lo = -2;
  long long int_hi = 5;
  int arr_max_len = 4;
  long long val_lo = 0;
  long long val_hi = 3;
  // elementary evaluation budget per VC
  long long budget = 4000000000LL;

  EvalWindow window() const {
    EvalWindow w;
    w.lo = int_lo;
    w.hi = int_hi;
    w.arr_max_len = arr_max_len;
    w.val_lo = val_lo;
    w.val_hi = val_hi;
    return w;
  }
  std::string str() const;
};

enum class VerdictKind { Valid, Counterexample, Unknown };

struct DischargeVerdict {
  VerdictKind kind = VerdictKind::Unknown;
  bool window_relative = true;  // false only for syntactic tautologies
  State counterexample;         // satisfies hypothesis, falsifies conclusion
  std::string unknown_reason;   // "budget" | "unbounded-construct"
  long long nodes = 0;          // enumeration work performed

  bool valid() const { return kind == VerdictKind::Valid; }
};

// Shared across VCs of one run: the array pool for the window and memoized
// permutation mates used to prune two-array enumeration.
class DischargeCache {
 public:
  explicit DischargeCache(const DomainConfig& cfg);
  const std::vector<ArrayVal>& pool() const { return pool_; }
  // indices of pool arrays B with perm(a, B, [lo:hi])
  const std::vector<int>& mates(const ArrayVal& a, long long lo, long long hi);

 private:
  std::vector<ArrayVal> pool_;
  std::map<std::string, std::vector<int>> memo_;
};

DischargeVerdict discharge_bounded(const VC& vc, const DomainConfig& cfg,
                                   DischargeCache* cache = nullptr);

enum class ReportStatus { Verified, Refuted, Inconclusive };

struct DischargeReport {
  std::vector<std::pair<const VC*, DischargeVerdict>> results;
  ReportStatus status = ReportStatus::Verified;
  int exit_code() const {
    switch (status) {
      case ReportStatus::Verified: return 0;
      case ReportStatus::Refuted: return 1;
      default: return 3;
    }
  }
};

DischargeReport discharge_report(const std::vector<VC>& vcs, const DomainConfig& cfg);

}  // namespace rpv
