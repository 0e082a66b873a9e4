#include "seqhc/operators/snake.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace seqhc::operators {

namespace {

// Guards against schedules whose path would not fit in memory.
constexpr std::uint64_t kMaxPathLength = std::uint64_t{1} << 26;

}  // namespace

std::uint64_t GrowthBudget::limit(std::size_t k) const {
  std::uint64_t v = coefficient;
  for (unsigned p = 0; p < power; ++p) v *= k;
  return v;
}

ShiftParams::ShiftParams(Rational lambda, spaces::SequenceNorm space, std::optional<GrowthBudget> budget)
    : lambda_(std::move(lambda)), space_(space), budget_(budget) {
  if (!(lambda_ > 1)) throw std::invalid_argument("shift weight lambda must satisfy lambda > 1");
  if (!budget_ && space_.kind == spaces::SequenceNorm::Kind::s) budget_ = GrowthBudget{};
}

ShiftParams ShiftParams::unchecked(Rational lambda, spaces::SequenceNorm space) {
  ShiftParams p;
  p.lambda_ = std::move(lambda);
  p.space_ = space;
  return p;
}

SnakeEnumeration::SnakeEnumeration() {
  path_.push_back({1, 1});
  inverse_.emplace(Cell{1, 1}, 0);
}

Cell SnakeEnumeration::position(std::uint64_t t) const {
  if (t < path_.size()) return path_[t];
  std::uint64_t col = frontier_ + (t - path_.size());
  for (const auto ahead : row1_ahead_) {
    if (ahead > col) break;
    ++col;
  }
  return {1, col};
}

std::optional<std::uint64_t> SnakeEnumeration::index_of(Cell cell) const {
  if (const auto it = inverse_.find(cell); it != inverse_.end()) return it->second;
  if (cell.row != 1 || cell.col < frontier_) return std::nullopt;
  const auto skipped = static_cast<std::uint64_t>(
      std::distance(row1_ahead_.begin(), row1_ahead_.lower_bound(cell.col)));
  return path_.size() + (cell.col - frontier_) - skipped;
}

const StageRecord& SnakeEnumeration::stage(std::size_t k) const {
  if (k == 0 || k > stages_.size())
    throw ScheduleMissing("no schedule for target " + std::to_string(k) + " (built " +
                          std::to_string(stages_.size()) + ")");
  return stages_[k - 1];
}

std::uint64_t SnakeEnumeration::l(std::size_t k) const { return k == 0 ? 0 : stage(k).l; }

std::string SnakeEnumeration::dump() const {
  std::ostringstream os;
  os << "# snake-enumeration v1\n# path: t i j\n";
  for (std::size_t t = 0; t < path_.size(); ++t) os << t << ' ' << path_[t].row << ' ' << path_[t].col << '\n';
  os << "# schedules: k m_k n_k l_k\n";
  for (const auto& s : stages_) os << s.k << ' ' << s.m << ' ' << s.n << ' ' << s.l << '\n';
  return os.str();
}

class SnakeBuilder {
 public:
  explicit SnakeBuilder(const ShiftParams& params) : params_(params) {}

  void place(std::size_t k, const TargetShape& target) {
    if (target.max_magnitude > static_cast<double>(k))
      throw std::invalid_argument("target " + std::to_string(k) + " has a coefficient of modulus " +
                                  std::to_string(target.max_magnitude) + " > " + std::to_string(k));

    for (const auto& cell : target.support) {
      if (cell.row == 0 || cell.col == 0) throw std::invalid_argument("grid indices start at 1");
      if (!e_.inverse_.contains(cell)) visit(cell);
    }

    std::uint64_t first = 0;
    std::uint64_t last = 0;
    if (!target.support.empty()) {
      first = UINT64_MAX;
      for (const auto& cell : target.support) {
        const auto t = e_.inverse_.at(cell);
        first = std::min(first, t);
        last = std::max(last, t);
      }
    }
    reach_ = std::max(reach_, last);

    const std::uint64_t l_prev = e_.l(k - 1);
    const std::uint64_t lk = e_.path_.size() + l_prev + 1;

    // Row-1 windows [l_k - l_j, l_k - l_j + reach] for j = k-1, ..., 0: every
    // T^{l_j} S_{l_k} x_i with i <= k lands inside window j.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    for (std::size_t j = k; j-- > 0;) {
      const std::uint64_t start = lk - e_.l(j);
      const std::uint64_t end = start + reach_;
      if (!runs.empty() && start <= runs.back().second + 1)
        runs.back().second = std::max(runs.back().second, end);
      else
        runs.emplace_back(start, end);
    }
    if (runs.back().second >= kMaxPathLength)
      throw SchedulingFailure(k, "schedule for target " + std::to_string(k) + " exceeds the path length limit");

    for (const auto& [start, end] : runs) {
      while (e_.path_.size() < start) visit(next_filler());
      assign_row1_run(end - start + 1);
    }

    StageRecord rec;
    rec.k = k;
    rec.l = lk;
    rec.support_first = first;
    rec.support_last = last;
    rec.reach = reach_;
    rec.m = e_.path_[first + lk].col;
    rec.n = e_.path_[last + lk].col;
    e_.stages_.push_back(rec);

    if (params_.budget() && rec.n > params_.budget()->limit(k))
      throw SchedulingFailure(k, "target " + std::to_string(k) + " needs n_k = " + std::to_string(rec.n) +
                                     " > budget " + std::to_string(params_.budget()->limit(k)));
  }

  SnakeEnumeration finish() && { return std::move(e_); }

 private:
  void visit(Cell cell) {
    if (cell.row == 1) {
      if (cell.col >= e_.frontier_)
        e_.row1_ahead_.insert(cell.col);
      else
        row1_gaps_.erase(cell.col);
    }
    e_.inverse_.emplace(cell, e_.path_.size());
    e_.path_.push_back(cell);
  }

  // Lowest unvisited cell in the diagonal order (i + j, then i), never a row-1
  // cell at or beyond the frontier.
  Cell next_filler() {
    while (true) {
      const Cell c{sweep_row_, sweep_sum_ - sweep_row_};
      if (!e_.inverse_.contains(c)) break;
      advance_sweep();
    }
    const Cell sweep{sweep_row_, sweep_sum_ - sweep_row_};
    if (!row1_gaps_.empty()) {
      const std::uint64_t gap = *row1_gaps_.begin();
      if (gap + 1 <= sweep_sum_) return {1, gap};
    }
    return sweep;
  }

  void advance_sweep() {
    if (++sweep_row_ >= sweep_sum_) {
      ++sweep_sum_;
      sweep_row_ = 2;
    }
  }

  void assign_row1_run(std::uint64_t length) {
    std::uint64_t start = e_.frontier_;
    while (true) {
      const auto blocker = e_.row1_ahead_.lower_bound(start);
      if (blocker == e_.row1_ahead_.end() || *blocker >= start + length) break;
      for (std::uint64_t c = start; c < *blocker; ++c) row1_gaps_.insert(c);
      start = *blocker + 1;
    }
    for (std::uint64_t c = 0; c < length; ++c) {
      const Cell cell{1, start + c};
      e_.inverse_.emplace(cell, e_.path_.size());
      e_.path_.push_back(cell);
    }
    e_.frontier_ = start + length;
    e_.row1_ahead_.erase(e_.row1_ahead_.begin(), e_.row1_ahead_.lower_bound(e_.frontier_));
  }

  ShiftParams params_;
  SnakeEnumeration e_;
  std::set<std::uint64_t> row1_gaps_;
  std::uint64_t sweep_sum_ = 3;
  std::uint64_t sweep_row_ = 2;
  std::uint64_t reach_ = 0;
};

SnakeEnumeration build_snake_enumeration(std::span<const TargetShape> targets, const ShiftParams& params) {
  SnakeBuilder builder(params);
  for (std::size_t k = 1; k <= targets.size(); ++k) builder.place(k, targets[k - 1]);
  return std::move(builder).finish();
}

}  // namespace seqhc::operators
