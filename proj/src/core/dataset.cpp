#include "gclr/core/dataset.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_set>

#include "gclr/core/errors.hpp"

namespace gclr::core {

Dataset::Dataset(std::vector<Entity> entities, int K, int n, DatasetOptions options)
    : Dataset(std::make_shared<const std::vector<Entity>>(std::move(entities)), K, n, options) {}

Dataset::Dataset(std::shared_ptr<const std::vector<Entity>> entities, int K, int n,
                 DatasetOptions options)
    : entities_(std::move(entities)), K_(K), n_(n), options_(options) {
  validate();
}

Dataset Dataset::with_params(int K, int n, DatasetOptions options) const {
  return Dataset(entities_, K, n, options);
}

void Dataset::validate() {
  if (K_ < 1) throw ContractError("K must be positive");
  if (n_ < 1) throw ContractError("n must be positive");
  if (entities_->empty()) throw ContractError("dataset has no entities");

  J_ = static_cast<int>(entities_->front().X.cols());
  if (J_ < 1) throw ContractError("dataset has no predictors");
  total_rows_ = 0;
  min_rows_ = entities_->front().observations();
  for (const auto& e : *entities_) {
    const auto L = e.observations();
    if (L < 1) throw ContractError("entity " + e.id + " has no observations");
    if (e.X.cols() != J_)
      throw ContractError("entity " + e.id + " has " + std::to_string(e.X.cols()) +
                          " predictors, expected " + std::to_string(J_));
    if (static_cast<std::size_t>(e.X.rows()) != L)
      throw ContractError("entity " + e.id + ": X and y row counts differ");
    if (!e.weeks.empty() && e.weeks.size() != L)
      throw ContractError("entity " + e.id + ": week labels do not match observations");
    if (!e.y.allFinite() || !e.X.allFinite())
      throw ContractError("entity " + e.id + " has non-finite values");
    total_rows_ += L;
    min_rows_ = std::min(min_rows_, L);
  }

  const auto I = entities_->size();
  if (I < static_cast<std::size_t>(K_) * static_cast<std::size_t>(n_))
    throw InfeasibleError("I = " + std::to_string(I) + " < K*n = " +
                          std::to_string(K_ * n_) + ": no feasible partition");
  if (!options_.allow_degenerate &&
      min_rows_ * static_cast<std::size_t>(n_) <= static_cast<std::size_t>(J_) + 1)
    throw DegenerateError("min L_i * n = " + std::to_string(min_rows_ * n_) +
                          " <= J + 1 = " + std::to_string(J_ + 1));
}

namespace {

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view field, std::size_t line, const char* what) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + std::string(field) + "'");
  if (!std::isfinite(v)) throw ParseError(line, std::string("non-finite ") + what);
  return v;
}

int parse_week(std::string_view field, std::size_t line) {
  field = trim(field);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, "malformed week '" + std::string(field) + "'");
  return v;
}

struct PendingEntity {
  std::string id;
  std::vector<double> y;
  std::vector<double> x;  // row-major L x J
  std::vector<int> weeks;
};

Entity finish(PendingEntity&& p, int J) {
  Entity e;
  e.id = std::move(p.id);
  const auto L = static_cast<Eigen::Index>(p.y.size());
  e.y = Eigen::Map<const Eigen::VectorXd>(p.y.data(), L);
  e.X = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      p.x.data(), L, J);
  e.weeks = std::move(p.weeks);
  return e;
}

}  // namespace

Dataset parse_dataset(std::istream& source, int n, int K, DatasetOptions options) {
  std::string line;
  std::size_t line_no = 0;

  // Header.
  while (std::getline(source, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw ParseError(line_no, "missing header");
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF) line.erase(0, 3);  // BOM
  const auto header = split_csv(trim(line));
  if (header.size() < 4 || trim(header[0]) != "entity_id" || trim(header[1]) != "week" ||
      trim(header[2]) != "y")
    throw ParseError(line_no, "header must be entity_id,week,y,x1,...,xJ");
  const int J = static_cast<int>(header.size()) - 3;

  std::vector<Entity> entities;
  std::unordered_set<std::string> seen;
  PendingEntity current;

  while (std::getline(source, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    const auto fields = split_csv(row);
    if (static_cast<int>(fields.size()) != J + 3)
      throw ParseError(line_no, "expected " + std::to_string(J + 3) + " fields, found " +
                                    std::to_string(fields.size()));
    const std::string id(trim(fields[0]));
    if (id.empty()) throw ParseError(line_no, "empty entity_id");
    if (id != current.id) {
      if (seen.contains(id))
        throw ParseError(line_no, "rows of entity '" + id + "' are not contiguous");
      if (!current.id.empty()) entities.push_back(finish(std::move(current), J));
      current = PendingEntity{};
      current.id = id;
      seen.insert(id);
    }
    current.weeks.push_back(parse_week(fields[1], line_no));
    current.y.push_back(parse_real(fields[2], line_no, "y"));
    for (int j = 0; j < J; ++j) current.x.push_back(parse_real(fields[3 + j], line_no, "x"));
  }
  if (!current.id.empty()) entities.push_back(finish(std::move(current), J));
  if (entities.empty()) throw ParseError(line_no, "no observation rows");

  return Dataset(std::move(entities), K, n, options);
}

Dataset load_dataset(const std::filesystem::path& path, int n, int K, DatasetOptions options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return parse_dataset(in, n, K, options);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_dataset_csv(std::ostream& out, const std::vector<Entity>& entities) {
  if (entities.empty()) return;
  const auto J = entities.front().X.cols();
  out << "entity_id,week,y";
  for (Eigen::Index j = 1; j <= J; ++j) out << ",x" << j;
  out << '\n';
  for (const auto& e : entities) {
    for (Eigen::Index l = 0; l < e.y.size(); ++l) {
      out << e.id << ',' << (e.weeks.empty() ? static_cast<int>(l) + 1 : e.weeks[l]) << ','
          << format_double(e.y[l]);
      for (Eigen::Index j = 0; j < J; ++j) out << ',' << format_double(e.X(l, j));
      out << '\n';
    }
  }
}

}  // namespace gclr::core
