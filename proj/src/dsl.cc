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

#include "prudens/dsl.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace prudens {
namespace {

constexpr std::size_t kMaxProfilesPerHistory = 1'000'000;
constexpr std::size_t kMaxDepth = 256;

enum class Tok { kIdent, kNumber, kSlash, kLParen, kRParen, kComma, kColon, kEquals, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceLoc loc;
};

bool IsKeyword(const std::string& s) {
  return s == "players" || s == "at" || s == "actions" || s == "payoff" || s == "matrix";
}

std::string Describe(const Token& t) {
  switch (t.kind) {
    case Tok::kEnd:
      return "end of input";
    case Tok::kIdent:
      return "'" + t.text + "'";
    case Tok::kNumber:
      return "number " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

[[noreturn]] void SyntaxError(SourceLoc loc, const std::string& msg) {
  throw ParseError(ParseError::Kind::kSyntax, loc, msg);
}
[[noreturn]] void SemanticError(SourceLoc loc, const std::string& msg) {
  throw ParseError(ParseError::Kind::kSemantic, loc, msg);
}

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t p = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++p;
    }
  };
  auto digit = [&](std::size_t q) {
    return q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]));
  };
  while (p < text.size()) {
    const char c = text[p];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (p < text.size() && text[p] != '\n') advance(1);
      continue;
    }
    Token t;
    t.loc = {line, col};
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc) || c == '_') {
      std::size_t q = p;
      while (q < text.size()) {
        const auto d = static_cast<unsigned char>(text[q]);
        if (!(std::isalnum(d) || d == '_' || d == '\'' || d == '-')) break;
        ++q;
      }
      t.kind = Tok::kIdent;
      t.text = std::string(text.substr(p, q - p));
      advance(q - p);
    } else if (digit(p) || (c == '-' && digit(p + 1))) {
      std::size_t q = p + 1;
      while (digit(q)) ++q;
      if (q < text.size() && text[q] == '/' && digit(q + 1)) {
        ++q;
        while (digit(q)) ++q;
      }
      t.kind = Tok::kNumber;
      t.text = std::string(text.substr(p, q - p));
      advance(q - p);
    } else {
      switch (c) {
        case '/': t.kind = Tok::kSlash; break;
        case '(': t.kind = Tok::kLParen; break;
        case ')': t.kind = Tok::kRParen; break;
        case ',': t.kind = Tok::kComma; break;
        case ':': t.kind = Tok::kColon; break;
        case '=': t.kind = Tok::kEquals; break;
        default: {
          std::ostringstream msg;
          if (uc >= 0x20 && uc < 0x7f) {
            msg << "unexpected character '" << c << "'";
          } else {
            msg << "unexpected byte 0x" << std::hex << static_cast<int>(uc);
          }
          SyntaxError(t.loc, msg.str());
        }
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.loc = {line, col};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  GameDoc Run() {
    ExpectKeyword("players");
    while (peek().kind == Tok::kIdent && !IsKeyword(peek().text)) {
      const Token& t = next();
      if (std::find(doc_.players.begin(), doc_.players.end(), t.text) != doc_.players.end()) {
        SemanticError(t.loc, "player '" + t.text + "' declared twice");
      }
      doc_.players.push_back(t.text);
    }
    if (doc_.players.empty()) SyntaxError(peek().loc, "expected a player name after 'players'");
    while (peek().kind != Tok::kEnd) {
      const Token& t = peek();
      if (t.kind == Tok::kIdent && t.text == "at") {
        At();
      } else if (t.kind == Tok::kIdent && t.text == "payoff") {
        Payoff();
      } else if (t.kind == Tok::kIdent && t.text == "matrix") {
        Matrix();
      } else {
        SyntaxError(t.loc, "expected 'at', 'payoff' or 'matrix', found " + Describe(t));
      }
    }
    return std::move(doc_);
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  const Token& Expect(Tok kind, const char* what) {
    if (peek().kind != kind) SyntaxError(peek().loc, std::string("expected ") + what + ", found " + Describe(peek()));
    return next();
  }
  void ExpectKeyword(const char* kw) {
    if (peek().kind != Tok::kIdent || peek().text != kw) {
      SyntaxError(peek().loc, std::string("expected '") + kw + "', found " + Describe(peek()));
    }
    next();
  }
  const Token& Name(const char* what) {
    if (peek().kind != Tok::kIdent || IsKeyword(peek().text)) {
      SyntaxError(peek().loc, std::string("expected ") + what + ", found " + Describe(peek()));
    }
    return next();
  }

  std::vector<std::string> Profile() {
    Expect(Tok::kLParen, "'('");
    std::vector<std::string> p{Name("an action").text};
    while (peek().kind == Tok::kComma) {
      next();
      p.push_back(Name("an action").text);
    }
    Expect(Tok::kRParen, "')' or ','");
    return p;
  }

  DocPath Path() {
    Expect(Tok::kSlash, "a path starting with '/'");
    DocPath path;
    if (peek().kind != Tok::kLParen) return path;
    path.push_back(Profile());
    while (peek().kind == Tok::kSlash) {
      next();
      path.push_back(Profile());
    }
    return path;
  }

  // (player ':' action+)+ ; an action list stops before `name :` or a keyword.
  std::vector<std::vector<std::string>> ActionLists() {
    std::vector<std::vector<std::string>> lists(doc_.players.size());
    std::vector<char> seen(doc_.players.size(), 0);
    bool any = false;
    while (peek().kind == Tok::kIdent && !IsKeyword(peek().text) && peek(1).kind == Tok::kColon) {
      const Token& who = next();
      next();
      const auto it = std::find(doc_.players.begin(), doc_.players.end(), who.text);
      if (it == doc_.players.end()) SemanticError(who.loc, "undeclared player '" + who.text + "'");
      const auto i = static_cast<std::size_t>(it - doc_.players.begin());
      if (seen[i]) SemanticError(who.loc, "actions for '" + who.text + "' given twice");
      seen[i] = 1;
      if (peek().kind != Tok::kIdent || IsKeyword(peek().text) || peek(1).kind == Tok::kColon) {
        SyntaxError(peek().loc, "expected an action for '" + who.text + "', found " + Describe(peek()));
      }
      while (peek().kind == Tok::kIdent && !IsKeyword(peek().text) && peek(1).kind != Tok::kColon) {
        const Token& a = next();
        if (std::find(lists[i].begin(), lists[i].end(), a.text) != lists[i].end()) {
          SemanticError(a.loc, "action '" + a.text + "' listed twice for '" + who.text + "'");
        }
        lists[i].push_back(a.text);
      }
      any = true;
    }
    if (!any) SyntaxError(peek().loc, "expected 'player: actions', found " + Describe(peek()));
    for (auto& l : lists) {
      if (l.empty()) l.emplace_back(kWaitAction);
    }
    return lists;
  }

  std::vector<Rational> Numbers() {
    std::vector<Rational> out;
    while (peek().kind == Tok::kNumber) {
      const Token& t = next();
      try {
        out.push_back(ParseRational(t.text));
      } catch (const std::invalid_argument&) {
        SyntaxError(t.loc, "bad rational " + t.text);
      }
    }
    return out;
  }

  void Declare(const DocPath& path, SourceLoc loc) {
    if (doc_.stages.count(path) || doc_.payoffs.count(path)) {
      SemanticError(loc, "duplicate history " + FormatPath(path));
    }
    if (path.size() > kMaxDepth) SemanticError(loc, "history nested too deeply");
    doc_.where[path] = loc;
  }

  void At() {
    const SourceLoc loc = next().loc;
    DocPath path = Path();
    ExpectKeyword("actions");
    auto lists = ActionLists();
    Declare(path, loc);
    doc_.stages.emplace(std::move(path), std::move(lists));
  }

  void AddPayoff(DocPath path, SourceLoc loc, std::vector<Rational> values) {
    if (values.size() != doc_.players.size()) {
      SemanticError(loc, "payoff for " + FormatPath(path) + " has " + std::to_string(values.size()) +
                             " entries, expected " + std::to_string(doc_.players.size()));
    }
    Declare(path, loc);
    doc_.payoffs.emplace(std::move(path), std::move(values));
  }

  void Payoff() {
    const SourceLoc loc = next().loc;
    DocPath path = Path();
    Expect(Tok::kEquals, "'='");
    if (peek().kind != Tok::kNumber) SyntaxError(peek().loc, "expected a payoff, found " + Describe(peek()));
    AddPayoff(std::move(path), loc, Numbers());
  }

  void Matrix() {
    const SourceLoc loc = next().loc;
    auto lists = ActionLists();
    Declare({}, loc);
    doc_.stages.emplace(DocPath{}, std::move(lists));
    if (peek().kind != Tok::kLParen) SyntaxError(peek().loc, "expected a cell '(...) = ...', found " + Describe(peek()));
    while (peek().kind == Tok::kLParen) {
      const SourceLoc cell = peek().loc;
      DocPath path{Profile()};
      Expect(Tok::kEquals, "'='");
      if (peek().kind != Tok::kNumber) SyntaxError(peek().loc, "expected a payoff, found " + Describe(peek()));
      AddPayoff(std::move(path), cell, Numbers());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  GameDoc doc_;
};

SourceLoc LocOf(const GameDoc& doc, const DocPath& p) {
  auto it = doc.where.find(p);
  return it == doc.where.end() ? SourceLoc{} : it->second;
}

std::size_t ProfileCount(const std::vector<std::vector<std::string>>& lists) {
  std::size_t n = 1;
  for (const auto& l : lists) {
    if (l.empty()) return 0;
    if (n > kMaxProfilesPerHistory / l.size()) return kMaxProfilesPerHistory + 1;
    n *= l.size();
  }
  return n;
}

// Odometer over the product of action lists, player 0 most significant.
bool NextProfile(std::vector<std::size_t>& idx, const std::vector<std::vector<std::string>>& lists) {
  for (std::size_t j = idx.size(); j-- > 0;) {
    if (++idx[j] < lists[j].size()) return true;
    idx[j] = 0;
  }
  return false;
}

std::vector<std::string> ProfileAt(const std::vector<std::size_t>& idx,
                                   const std::vector<std::vector<std::string>>& lists) {
  std::vector<std::string> p(idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) p[j] = lists[j][idx[j]];
  return p;
}

void Validate(const GameDoc& doc) {
  const std::size_t n = doc.players.size();
  if (n == 0) SemanticError({}, "no players declared");
  {
    std::set<std::string> names(doc.players.begin(), doc.players.end());
    if (names.size() != n) SemanticError({}, "duplicate player name");
  }
  if (!doc.stages.count(DocPath{})) {
    SemanticError(LocOf(doc, {}), doc.payoffs.count(DocPath{}) ? "the root history must have actions"
                                                              : "missing 'at /' block for the root");
  }
  // Entries in source order so the first problem reported is the first in the text.
  std::vector<std::pair<SourceLoc, const DocPath*>> order;
  for (const auto& [p, l] : doc.stages) order.push_back({LocOf(doc, p), &p});
  for (const auto& [p, v] : doc.payoffs) {
    if (doc.stages.count(p)) SemanticError(LocOf(doc, p), "duplicate history " + FormatPath(p));
    order.push_back({LocOf(doc, p), &p});
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.line, a.first.column) < std::tie(b.first.line, b.first.column);
  });
  std::map<DocPath, std::size_t> child_count;
  for (const auto& [loc, pp] : order) {
    const DocPath& p = *pp;
    if (auto it = doc.stages.find(p); it != doc.stages.end()) {
      if (it->second.size() != n) SemanticError(loc, "action lists of " + FormatPath(p) + " do not match the players");
      for (std::size_t j = 0; j < n; ++j) {
        const auto& l = it->second[j];
        if (l.empty()) SemanticError(loc, "player '" + doc.players[j] + "' has no action at " + FormatPath(p));
        std::set<std::string> u(l.begin(), l.end());
        if (u.size() != l.size()) SemanticError(loc, "repeated action at " + FormatPath(p));
      }
      if (ProfileCount(it->second) > kMaxProfilesPerHistory) {
        SemanticError(loc, "too many action profiles at " + FormatPath(p));
      }
    } else if (doc.payoffs.at(p).size() != n) {
      SemanticError(loc, "payoff for " + FormatPath(p) + " does not have one entry per player");
    }
    if (p.empty()) continue;
    const DocPath parent(p.begin(), p.end() - 1);
    auto st = doc.stages.find(parent);
    if (st == doc.stages.end()) {
      SemanticError(loc, "history " + FormatPath(p) + " has no 'at' block for " + FormatPath(parent));
    }
    const auto& prof = p.back();
    if (prof.size() != n) {
      SemanticError(loc, "profile in " + FormatPath(p) + " has " + std::to_string(prof.size()) +
                             " actions, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& l = st->second[j];
      if (std::find(l.begin(), l.end(), prof[j]) == l.end()) {
        SemanticError(loc, "action '" + prof[j] + "' is not available to '" + doc.players[j] + "' at " +
                               FormatPath(parent));
      }
    }
    ++child_count[parent];
  }
  for (const auto& [loc, pp] : order) {
    auto it = doc.stages.find(*pp);
    if (it == doc.stages.end()) continue;
    const std::size_t want = ProfileCount(it->second);
    if (child_count[*pp] == want) continue;
    // Some profile is missing; the odometer finds it within want+1 steps.
    std::vector<std::size_t> idx(n, 0);
    do {
      DocPath c = *pp;
      c.push_back(ProfileAt(idx, it->second));
      if (!doc.stages.count(c) && !doc.payoffs.count(c)) {
        SemanticError(loc, "missing payoff for " + FormatPath(c));
      }
    } while (NextProfile(idx, it->second));
  }
}

NodeSpec BuildSpec(const GameDoc& doc, const DocPath& path) {
  NodeSpec spec;
  if (auto it = doc.payoffs.find(path); it != doc.payoffs.end()) {
    spec.payoff = it->second;
    return spec;
  }
  const auto& lists = doc.stages.at(path);
  spec.actions = lists;
  std::vector<std::size_t> idx(lists.size(), 0);
  DocPath child = path;
  child.emplace_back();
  do {
    child.back() = ProfileAt(idx, lists);
    spec.children.push_back(BuildSpec(doc, child));
  } while (NextProfile(idx, lists));
  return spec;
}

bool AllWait(const std::vector<std::string>& l) { return l.size() == 1 && l[0] == kWaitAction; }

std::string Payoffs(const std::vector<Rational>& v) {
  std::string s;
  for (const auto& r : v) s += " " + ToString(r);
  return s;
}

// `all` writes every player; otherwise players with only "wait" are left
// out, keeping at least one so the block still parses.
std::string ActionLine(const GameDoc& doc, const std::vector<std::vector<std::string>>& lists, bool all) {
  std::string s;
  for (std::size_t j = 0; j < lists.size(); ++j) {
    if (!all && AllWait(lists[j])) continue;
    s += (s.empty() ? " " : "  ") + doc.players[j] + ":";
    for (const auto& a : lists[j]) s += " " + a;
  }
  if (s.empty() && !lists.empty()) {
    s = " " + doc.players[0] + ":";
    for (const auto& a : lists[0]) s += " " + a;
  }
  return s;
}

void EmitTree(const GameDoc& doc, const DocPath& path, std::set<DocPath>& done, std::string& out) {
  if (done.count(path)) return;
  if (auto it = doc.payoffs.find(path); it != doc.payoffs.end()) {
    done.insert(path);
    out += "payoff " + FormatPath(path) + " =" + Payoffs(it->second) + "\n";
    return;
  }
  auto st = doc.stages.find(path);
  if (st == doc.stages.end()) return;
  done.insert(path);
  out += "at " + FormatPath(path) + " actions" + ActionLine(doc, st->second, false) + "\n";
  if (ProfileCount(st->second) > kMaxProfilesPerHistory || st->second.size() != doc.players.size()) return;
  std::vector<std::size_t> idx(st->second.size(), 0);
  if (std::any_of(st->second.begin(), st->second.end(), [](const auto& l) { return l.empty(); })) return;
  DocPath child = path;
  child.emplace_back();
  do {
    child.back() = ProfileAt(idx, st->second);
    EmitTree(doc, child, done, out);
  } while (NextProfile(idx, st->second));
}

}  // namespace

ParseError::ParseError(Kind kind, SourceLoc loc, const std::string& message)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                         (kind == Kind::kSyntax ? "syntax error: " : "error: ") + message),
      kind_(kind),
      loc_(loc),
      message_(message) {}

std::string FormatPath(const DocPath& path) {
  if (path.empty()) return "/";
  std::string s;
  for (const auto& prof : path) {
    s += "/(";
    for (std::size_t j = 0; j < prof.size(); ++j) {
      if (j) s += ",";
      s += prof[j];
    }
    s += ")";
  }
  return s;
}

GameDoc ParseGameDoc(std::string_view text) {
  GameDoc doc = Parser(Lex(text)).Run();
  Validate(doc);
  return doc;
}

std::string SerializeGameDoc(const GameDoc& doc) {
  std::string out = "players";
  for (const auto& p : doc.players) out += " " + p;
  out += "\n";
  const bool is_static = doc.stages.size() == 1 && doc.stages.count(DocPath{}) &&
                         std::all_of(doc.payoffs.begin(), doc.payoffs.end(),
                                     [](const auto& e) { return e.first.size() == 1; });
  if (is_static) {
    const auto& lists = doc.stages.at(DocPath{});
    out += "matrix" + ActionLine(doc, lists, true) + "\n";
    std::vector<std::size_t> idx(lists.size(), 0);
    std::set<DocPath> done;
    if (ProfileCount(lists) <= kMaxProfilesPerHistory && lists.size() == doc.players.size()) {
      do {
        DocPath c{ProfileAt(idx, lists)};
        if (auto it = doc.payoffs.find(c); it != doc.payoffs.end()) {
          out += "  " + FormatPath(c).substr(1) + " =" + Payoffs(it->second) + "\n";
          done.insert(c);
        }
      } while (NextProfile(idx, lists));
    }
    for (const auto& [p, v] : doc.payoffs) {
      if (!done.count(p)) out += "  " + FormatPath(p).substr(1) + " =" + Payoffs(v) + "\n";
    }
    return out;
  }
  std::set<DocPath> done;
  EmitTree(doc, DocPath{}, done, out);
  // Anything unreachable (only in documents that fail validation).
  for (const auto& [p, l] : doc.stages) {
    if (!done.count(p)) out += "at " + FormatPath(p) + " actions" + ActionLine(doc, l, false) + "\n";
  }
  for (const auto& [p, v] : doc.payoffs) {
    if (!done.count(p)) out += "payoff " + FormatPath(p) + " =" + Payoffs(v) + "\n";
  }
  return out;
}

Game Elaborate(const GameDoc& doc) {
  Validate(doc);
  try {
    return Game::Create(doc.players, BuildSpec(doc, DocPath{}));
  } catch (const GameError& e) {
    SemanticError({}, e.what());
  }
}

GameDoc ToDoc(const Game& game) {
  GameDoc doc;
  doc.players = game.players();
  for (HistoryId h : game.nonterminals()) {
    std::vector<std::vector<std::string>> lists;
    for (PlayerId i = 0; i < game.num_players(); ++i) lists.push_back(game.Actions(h, i));
    doc.stages.emplace(game.HistoryPath(h), std::move(lists));
  }
  for (HistoryId z : game.terminals()) doc.payoffs.emplace(game.HistoryPath(z), game.Payoffs(z));
  return doc;
}

Game ParseGame(std::string_view text) { return Elaborate(ParseGameDoc(text)); }

std::string SerializeGame(const Game& game) { return SerializeGameDoc(ToDoc(game)); }

Game LoadGameFile(const std::string& filename) {
  std::ifstream in(filename, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + filename);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseGame(ss.str());
}

}  // namespace prudens
