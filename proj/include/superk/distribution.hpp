#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace superk {

enum class WeightMode { Probabilities, Counts };

/// A validated finite probability vector over labeled outcomes.
/// Invariants: at least one outcome, every probability in [0, 1], and the
/// probabilities sum to 1 within 1e-9 (exact renormalization is opt-in,
/// never silent).
class Distribution {
 public:
  static Distribution from_probs(std::vector<std::string> labels,
                                 std::vector<double> probs,
                                 bool renormalize = false);
  static Distribution from_counts(std::vector<std::string> labels,
                                  std::vector<double> counts);
  static Distribution uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool same_outcomes(const Distribution& other) const;

  /// Reordered copy: outcome i of the result is outcome perm[i] of *this.
  Distribution permuted(const std::vector<std::size_t>& perm) const;

 private:
  Distribution(std::vector<std::string> labels, std::vector<double> probs)
      : labels_(std::move(labels)), probs_(std::move(probs)) {}

  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

inline constexpr double kProbSumTolerance = 1e-9;

/// Parses the "label whitespace weight" line format. Blank lines and lines
/// starting with '#' are skipped. Duplicate labels are rejected.
Distribution read_distribution(std::istream& in, WeightMode mode,
                               bool renormalize = false);
Distribution read_distribution_file(const std::string& path, WeightMode mode,
                                    bool renormalize = false);

/// Parses a comma-separated weight list ("0.5,0.25,0.25"); outcomes are
/// labeled x0, x1, ... in order.
Distribution parse_inline_distribution(std::string_view weights,
                                       WeightMode mode,
                                       bool renormalize = false);

}  // namespace superk
