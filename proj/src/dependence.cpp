#include "realtrace/dependence.hpp"

#include "realtrace/errors.hpp"

namespace realtrace {

AlphabetRef validate_alphabet(const std::vector<std::string>& letters,
                              const std::vector<std::pair<std::string, std::string>>& depend_pairs,
                              bool allow_isolated) {
  if (letters.empty()) throw InputError("alphabet must have at least one letter");
  std::shared_ptr<DependenceAlphabet> da(new DependenceAlphabet());
  da->letters_ = Alphabet(letters);
  da->allow_isolated_ = allow_isolated;
  da->dependents_.resize(letters.size());
  for (Letter a = 0; a < letters.size(); ++a) da->dependents_[a].insert(a);
  for (const auto& [x, y] : depend_pairs) {
    const Letter a = da->letters_.letter(x);
    const Letter b = da->letters_.letter(y);
    da->dependents_[a].insert(b);
    da->dependents_[b].insert(a);
  }
  if (!allow_isolated) {
    for (Letter a = 0; a < letters.size(); ++a) {
      if (da->is_isolated(a)) throw InputError("letter '" + letters[a] + "' is isolated");
    }
  }
  return da;
}

void require_no_isolated(const DependenceAlphabet& da) {
  for (Letter a = 0; a < da.size(); ++a) {
    if (da.is_isolated(a)) throw InputError("letter '" + da.letters().symbol(a) + "' is isolated");
  }
}

bool DependenceAlphabet::is_isolated(Letter a) const { return dependents_[a].size() == 1; }

bool DependenceAlphabet::has_isolated_letter() const {
  for (Letter a = 0; a < size(); ++a)
    if (is_isolated(a)) return true;
  return false;
}

std::vector<std::pair<Letter, Letter>> DependenceAlphabet::independence_pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter a = 0; a < size(); ++a)
    for (Letter b = 0; b < size(); ++b)
      if (independent(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Letter, Letter>> DependenceAlphabet::dependence_pairs() const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter a = 0; a < size(); ++a)
    for (Letter b = a + 1; b < size(); ++b)
      if (depends(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace realtrace
