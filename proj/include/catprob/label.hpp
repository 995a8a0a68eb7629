// Copyright 2026 The catprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CATPROB_LABEL_HPP
#define CATPROB_LABEL_HPP

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace catprob {

// An element of a finite set. Atoms are opaque names; coproduct elements
// carry an injection tag (k1, k2, ...); tensor elements are ordered pairs.
//
// Text form, used for printing and as JSON keys:
//   atom     M
//   tagged   k1(M)
//   pair     (A,M)
// Atom names may not contain '(', ')' or ','.
class Label {
public:
  enum class Kind { Atom, Tagged, Pair };

  Label(const char *name) : Label(std::string(name)) {}
  Label(std::string name);

  static Label tagged(int tag, Label inner);
  static Label pair(Label first, Label second);

  Kind kind() const noexcept { return kind_; }
  bool is_atom() const noexcept { return kind_ == Kind::Atom; }
  bool is_tagged() const noexcept { return kind_ == Kind::Tagged; }
  bool is_pair() const noexcept { return kind_ == Kind::Pair; }

  const std::string &name() const;
  int tag() const;
  const Label &inner() const;
  const Label &first() const;
  const Label &second() const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const Label &a, const Label &b);
  friend bool operator==(const Label &a, const Label &b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

private:
  Label() = default;

  Kind kind_ = Kind::Atom;
  std::string name_;
  int tag_ = 0;
  std::vector<Label> children_;
};

Label parse_label(std::string_view text);

inline std::ostream &operator<<(std::ostream &os, const Label &label) {
  return os << label.str();
}

} // namespace catprob

#endif // CATPROB_LABEL_HPP
