#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "realtrace/alphabet.hpp"

namespace realtrace {

/// A finite alphabet with a reflexive, symmetric dependence relation D.
/// The complement of D is the independence relation I_D. Letters commute
/// in traces exactly when they are independent.
class DependenceAlphabet {
 public:
  const Alphabet& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  bool depends(Letter a, Letter b) const { return dependents_[a].contains(b); }
  bool independent(Letter a, Letter b) const { return !depends(a, b); }
  LetterSet dependents(Letter a) const { return dependents_[a]; }

  /// Ordered pairs (a,b) with a, b independent; symmetric, irreflexive.
  std::vector<std::pair<Letter, Letter>> independence_pairs() const;
  /// Unordered dependent pairs {a,b} with a < b.
  std::vector<std::pair<Letter, Letter>> dependence_pairs() const;

  /// A letter is isolated when it is independent of every other letter.
  bool is_isolated(Letter a) const;
  bool has_isolated_letter() const;
  bool allows_isolated() const { return allow_isolated_; }

  bool operator==(const DependenceAlphabet& o) const {
    return letters_ == o.letters_ && dependents_ == o.dependents_;
  }

 private:
  friend std::shared_ptr<const DependenceAlphabet> validate_alphabet(
      const std::vector<std::string>&, const std::vector<std::pair<std::string, std::string>>&, bool);

  DependenceAlphabet() = default;

  Alphabet letters_;
  std::vector<LetterSet> dependents_;
  bool allow_isolated_ = false;
};

using AlphabetRef = std::shared_ptr<const DependenceAlphabet>;

/// Builds the reflexive-symmetric closure of `depend_pairs` over `letters`.
/// Throws InputError on duplicate letters, pairs naming unknown letters, and
/// isolated letters unless `allow_isolated` is set.
AlphabetRef validate_alphabet(const std::vector<std::string>& letters,
                              const std::vector<std::pair<std::string, std::string>>& depend_pairs,
                              bool allow_isolated = false);

/// Throws InputError when `da` has an isolated letter.
void require_no_isolated(const DependenceAlphabet& da);

}  // namespace realtrace
