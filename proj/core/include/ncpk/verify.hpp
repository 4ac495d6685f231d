#pragma once

#include <string>
#include <vector>

#include "ncpk/counting.hpp"

namespace ncpk {

enum class ClaimStatus { Pass, Fail, Open };

struct ClaimResult {
  std::string claim_id;
  std::string anchor;  // the statement being checked
  BigCount closed_form;
  BigCount observed;
  ClaimStatus status = ClaimStatus::Fail;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;
  bool ok() const;  // no Fail entries; Open never counts as failure
  size_t count(ClaimStatus s) const;
};

struct VerifyOptions {
  int max_n = 4;
  int max_k = 3;
  int max_N = 13;       // poset builds
  int max_m = 2;
  size_t max_states = 1'000'000;
  bool include_typeb = true;
};

VerificationReport run_verification(const VerifyOptions& opt);

const char* to_string(ClaimStatus s);

}  // namespace ncpk
