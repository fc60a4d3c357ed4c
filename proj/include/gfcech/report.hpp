#pragma once

#include "gfcech/session.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace gfcech {

struct RunOptions {
  bool assert_hypotheses = false;
  std::optional<std::uint64_t> seed_override;
};

struct RunResult {
  nlohmann::ordered_json report;
  /* 0 clean; 1 when a task errored, or in assert mode when a hypothesis is
     unmet or a verdict is negative. */
  int exit_code = 0;
};

/* Executes the tasks in order; failures are isolated per task and recorded in
   that task's entry. The report is byte-stable for a fixed session and seed,
   except for the timing_ms fields. */
RunResult run_session(const SessionSpec& spec, const RunOptions& opts = {});

/* One file per task table and spot: task<i>_<kind>_spot<k>.csv with
   degree,dimension,stable,level rows. */
void write_csv_tables(const nlohmann::ordered_json& report, const std::string& dir);

/* delta=N: <numerator> = <cofactor combination of the denominator powers>,
   with a trailing marker when relation generators take part. */
std::string render_certificate(const GfZeroCertificate& cert);
std::string render_certificate(const std::optional<GfZeroCertificate>& cert);

}  // namespace gfcech
