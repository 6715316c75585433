#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace gclr::core {

// One clustered unit with its own observations. Row l of X holds the
// predictors of observation l; weeks[l] is the informational week label
// from the CSV (used only by the two-stage heuristic).
struct Entity {
  std::string id;
  Eigen::VectorXd y;
  Eigen::MatrixXd X;
  std::vector<int> weeks;

  std::size_t observations() const noexcept { return static_cast<std::size_t>(y.size()); }
};

struct DatasetOptions {
  // Skip the min(L_i) * n > J + 1 check. Only meant for experiments that
  // deliberately allow zero-error clusters.
  bool allow_degenerate = false;
};

// Immutable problem instance: entities plus the target cluster count K and
// the minimum cluster size n. Copies share the entity storage.
class Dataset {
 public:
  Dataset(std::vector<Entity> entities, int K, int n, DatasetOptions options = {});

  std::size_t size() const noexcept { return entities_->size(); }
  int J() const noexcept { return J_; }
  int K() const noexcept { return K_; }
  int n() const noexcept { return n_; }
  const DatasetOptions& options() const noexcept { return options_; }

  const Entity& entity(std::size_t i) const { return (*entities_)[i]; }
  const std::vector<Entity>& entities() const noexcept { return *entities_; }
  std::size_t total_observations() const noexcept { return total_rows_; }
  std::size_t min_observations() const noexcept { return min_rows_; }

  // Same entities, different cluster parameters (revalidated).
  Dataset with_params(int K, int n, DatasetOptions options = {}) const;

 private:
  Dataset(std::shared_ptr<const std::vector<Entity>> entities, int K, int n,
          DatasetOptions options);
  void validate();

  std::shared_ptr<const std::vector<Entity>> entities_;
  int J_ = 0;
  int K_ = 0;
  int n_ = 0;
  DatasetOptions options_;
  std::size_t total_rows_ = 0;
  std::size_t min_rows_ = 0;
};

// Reads the instance CSV: header `entity_id,week,y,x1,...,xJ`, one row per
// observation, rows of one entity contiguous. Entities keep first-appearance
// order.
Dataset parse_dataset(std::istream& source, int n, int K, DatasetOptions options = {});
Dataset load_dataset(const std::filesystem::path& path, int n, int K,
                     DatasetOptions options = {});

// Writes entities in the CSV format above with 17 significant digits, so
// that parse_dataset reproduces every value bit for bit.
void write_dataset_csv(std::ostream& out, const std::vector<Entity>& entities);

std::string format_double(double v);

}  // namespace gclr::core
