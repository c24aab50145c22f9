// Copyright 2026 The Prudens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRUDENS_DSL_H_
#define PRUDENS_DSL_H_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prudens/game.h"
#include "prudens/rational.h"

namespace prudens {

// A history written as its sequence of action profiles (by action name, one
// entry per player). The root is the empty path.
using DocPath = std::vector<std::vector<std::string>>;

struct SourceLoc {
  int line = 0;  // 1-based; 0 when unknown
  int column = 0;
};

// Parsed text form of a game. Players left out of an `at` block get the
// single action "wait", so `stages` always lists every player.
struct GameDoc {
  std::vector<std::string> players;
  std::map<DocPath, std::vector<std::vector<std::string>>> stages;
  std::map<DocPath, std::vector<Rational>> payoffs;
  // Where each history was declared. Not part of equality.
  std::map<DocPath, SourceLoc> where;

  friend bool operator==(const GameDoc& a, const GameDoc& b) {
    return a.players == b.players && a.stages == b.stages && a.payoffs == b.payoffs;
  }
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kSemantic };
  ParseError(Kind kind, SourceLoc loc, const std::string& message);

  Kind kind() const { return kind_; }
  SourceLoc loc() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  SourceLoc loc_;
  std::string message_;
};

inline constexpr std::string_view kWaitAction = "wait";

// Parses and validates a document (tree shape, declared actions, one payoff
// vector per terminal history). Throws ParseError; never anything else on
// arbitrary input except std::bad_alloc.
GameDoc ParseGameDoc(std::string_view text);

// Canonical text. Static games use the matrix shorthand; otherwise histories
// are written in preorder with each `at` block before its subtree.
std::string SerializeGameDoc(const GameDoc& doc);

// Checks the same invariants as ParseGameDoc and builds the Game.
Game Elaborate(const GameDoc& doc);
GameDoc ToDoc(const Game& game);

std::string FormatPath(const DocPath& path);

// Shorthands.
Game ParseGame(std::string_view text);
std::string SerializeGame(const Game& game);
Game LoadGameFile(const std::string& filename);

}  // namespace prudens

#endif  // PRUDENS_DSL_H_
