#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gclr/core/dataset.hpp"
#include "gclr/core/partition.hpp"

namespace gclr::harness {

struct RunRecord {
  std::string instance_id;
  std::string cell;  // "I_K"
  std::string algorithm;
  int K = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::string params;  // compact JSON
  double sse = 0.0;
  double wall_time_ms = 0.0;
  bool converged = false;
  std::vector<int> labels;  // cluster per entity, in instance order
  std::string error;        // empty on success
};

struct TracePoint {
  std::string instance_id;
  std::string algorithm;
  int K = 0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  double sse = 0.0;
};

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& in);

void write_traces_csv(std::ostream& out, const std::vector<TracePoint>& traces);

// Recomputes the SSE of the stored partition; throws ContractError when it
// differs from the recorded value by more than rel_tol.
void verify_record(const RunRecord& record, const core::Dataset& dataset, double rel_tol = 1e-9);

// CSV field helpers (RFC 4180 quoting).
std::string csv_quote(const std::string& field);
std::vector<std::string> csv_split(const std::string& line);

}  // namespace gclr::harness
