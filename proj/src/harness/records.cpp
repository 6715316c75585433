#include "gclr/harness/records.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "gclr/core/errors.hpp"

namespace gclr::harness {

namespace {

const char* kRecordHeader =
    "instance_id,cell,algorithm,K,n,seed,params,sse,wall_time_ms,converged,partition,error";

std::string join_labels(const std::vector<int>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(labels[i]);
  }
  return out;
}

std::vector<int> split_labels(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    out << csv_quote(r.instance_id) << ',' << csv_quote(r.cell) << ',' << csv_quote(r.algorithm)
        << ',' << r.K << ',' << r.n << ',' << r.seed << ',' << csv_quote(r.params) << ','
        << core::format_double(r.sse) << ',' << core::format_double(r.wall_time_ms) << ','
        << (r.converged ? 1 : 0) << ',' << join_labels(r.labels) << ',' << csv_quote(r.error)
        << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || csv_split(line) != csv_split(kRecordHeader))
    throw ParseError(1, "records file must start with the header " + std::string(kRecordHeader));
  std::vector<RunRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = csv_split(line);
    if (f.size() != 12) throw ParseError(line_no, "expected 12 fields, found " + std::to_string(f.size()));
    try {
      RunRecord r;
      r.instance_id = f[0];
      r.cell = f[1];
      r.algorithm = f[2];
      r.K = std::stoi(f[3]);
      r.n = std::stoi(f[4]);
      r.seed = std::stoull(f[5]);
      r.params = f[6];
      r.sse = std::stod(f[7]);
      r.wall_time_ms = std::stod(f[8]);
      r.converged = f[9] == "1";
      r.labels = split_labels(f[10]);
      r.error = f[11];
      out.push_back(std::move(r));
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, std::string("bad numeric field: ") + e.what());
    }
  }
  return out;
}

void write_traces_csv(std::ostream& out, const std::vector<TracePoint>& traces) {
  out << "instance_id,algorithm,K,seed,elapsed_ms,sse\n";
  for (const auto& t : traces)
    out << csv_quote(t.instance_id) << ',' << csv_quote(t.algorithm) << ',' << t.K << ','
        << t.seed << ',' << core::format_double(t.elapsed_ms) << ',' << core::format_double(t.sse)
        << '\n';
}

void verify_record(const RunRecord& record, const core::Dataset& dataset, double rel_tol) {
  if (!record.error.empty()) throw ContractError("record of a failed run: " + record.error);
  const core::Partition p(record.K, record.labels);
  const double sse = core::partition_sse(dataset, p);
  if (std::abs(sse - record.sse) > rel_tol * std::max(1.0, std::abs(sse)))
    throw ContractError("record SSE " + core::format_double(record.sse) +
                        " does not match recomputed " + core::format_double(sse));
}

}  // namespace gclr::harness
