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

#include "catprob/label.hpp"

#include "catprob/error.hpp"

#include <cctype>

namespace catprob {

namespace {

bool valid_atom(std::string_view name) {
  if (name.empty()) {
    return false;
  }
  for (char c : name) {
    if (c == '(' || c == ')' || c == ',' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

class LabelParser {
public:
  explicit LabelParser(std::string_view text) : text_(text) {}

  Label parse_all() {
    Label result = parse();
    if (pos_ != text_.size()) {
      fail("trailing characters");
    }
    return result;
  }

private:
  Label parse() {
    if (peek() == '(') {
      ++pos_;
      Label first = parse();
      expect(',');
      Label second = parse();
      expect(')');
      return Label::pair(std::move(first), std::move(second));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ',') {
      ++pos_;
    }
    std::string_view word = text_.substr(start, pos_ - start);
    if (peek() == '(') {
      // Only k<digits>( introduces an injection tag.
      if (word.size() < 2 || word[0] != 'k') {
        fail("unexpected '('");
      }
      int tag = 0;
      for (char c : word.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          fail("bad injection tag");
        }
        tag = tag * 10 + (c - '0');
      }
      ++pos_;
      Label inner = parse();
      expect(')');
      return Label::tagged(tag, std::move(inner));
    }
    if (!valid_atom(word)) {
      fail("empty or malformed atom");
    }
    return Label(std::string(word));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string &why) const {
    throw Error(ErrorKind::ParseError, "label '" + std::string(text_) +
                                           "' at offset " +
                                           std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Label::Label(std::string name) : kind_(Kind::Atom), name_(std::move(name)) {
  if (!valid_atom(name_)) {
    throw Error(ErrorKind::ParseError, "invalid atom name '" + name_ + "'");
  }
}

Label Label::tagged(int tag, Label inner) {
  if (tag < 1) {
    throw Error(ErrorKind::ParseError, "injection tags start at 1");
  }
  Label l;
  l.kind_ = Kind::Tagged;
  l.tag_ = tag;
  l.children_.push_back(std::move(inner));
  return l;
}

Label Label::pair(Label first, Label second) {
  Label l;
  l.kind_ = Kind::Pair;
  l.children_.reserve(2);
  l.children_.push_back(std::move(first));
  l.children_.push_back(std::move(second));
  return l;
}

const std::string &Label::name() const { return name_; }
int Label::tag() const { return tag_; }
const Label &Label::inner() const { return children_.at(0); }
const Label &Label::first() const { return children_.at(0); }
const Label &Label::second() const { return children_.at(1); }

std::string Label::str() const {
  switch (kind_) {
  case Kind::Atom:
    return name_;
  case Kind::Tagged:
    return "k" + std::to_string(tag_) + "(" + children_[0].str() + ")";
  case Kind::Pair:
    return "(" + children_[0].str() + "," + children_[1].str() + ")";
  }
  return {};
}

std::strong_ordering operator<=>(const Label &a, const Label &b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) {
    return c;
  }
  switch (a.kind_) {
  case Label::Kind::Atom:
    return a.name_.compare(b.name_) <=> 0;
  case Label::Kind::Tagged:
    if (auto c = a.tag_ <=> b.tag_; c != 0) {
      return c;
    }
    return a.children_[0] <=> b.children_[0];
  case Label::Kind::Pair:
    if (auto c = a.children_[0] <=> b.children_[0]; c != 0) {
      return c;
    }
    return a.children_[1] <=> b.children_[1];
  }
  return std::strong_ordering::equal;
}

Label parse_label(std::string_view text) { return LabelParser(text).parse_all(); }

} // namespace catprob
