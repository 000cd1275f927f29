// Line-oriented text format and its JSON mirror.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "maip/diagram.hpp"
#include "maip/errors.hpp"

namespace maip {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.size() < 10 &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Accumulates passages and the crossing table while reporting errors through
// a callback that must not return.
class EventBuilder {
 public:
  using Fail = std::function<void(const std::string&)>;

  Passage add(std::string_view tok, const Fail& fail) {
    if (tok.empty()) fail("empty token");
    char kind = tok[0];
    if (kind == 'O' || kind == 'U') {
      if (tok.size() < 3) fail("malformed token '" + std::string(tok) + "'");
      char s = tok.back();
      if (s != '+' && s != '-') fail("token '" + std::string(tok) + "' needs a trailing sign");
      std::string_view num = tok.substr(1, tok.size() - 2);
      if (!all_digits(num)) fail("bad crossing id in '" + std::string(tok) + "'");
      CrossingId id = std::stoi(std::string(num));
      int sign = s == '+' ? 1 : -1;
      record(id, CrossingRecord::classical(sign), fail);
      return Passage{id, kind == 'O' ? Role::Over : Role::Under};
    }
    if (kind == 'X' || kind == 'Y') {
      std::string_view num = tok.substr(1);
      if (!all_digits(num)) fail("bad crossing id in '" + std::string(tok) + "'");
      CrossingId id = std::stoi(std::string(num));
      record(id, CrossingRecord::singular(), fail);
      return Passage{id, kind == 'X' ? Role::SingPrimary : Role::SingSecondary};
    }
    fail("unknown token '" + std::string(tok) + "'");
    return {};
  }

  std::map<CrossingId, CrossingRecord> take() { return std::move(table_); }

 private:
  void record(CrossingId id, CrossingRecord rec, const Fail& fail) {
    if (id <= 0) fail("crossing id must be positive");
    auto [it, inserted] = table_.try_emplace(id, rec);
    if (inserted) return;
    if (it->second.kind != rec.kind) {
      fail("crossing " + std::to_string(id) + " used as both classical and singular");
    }
    if (it->second.sign != rec.sign) fail("sign mismatch at crossing " + std::to_string(id));
  }

  std::map<CrossingId, CrossingRecord> table_;
};

std::optional<Slot> parse_slot(std::string_view s) {
  if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B') || !all_digits(s.substr(1))) return std::nullopt;
  int k = std::stoi(std::string(s.substr(1)));
  return s[0] == 'T' ? Slot::top(k) : Slot::bottom(k);
}

int parse_arity(const Token& tok, std::string_view key, int line) {
  std::string prefix = std::string(key) + "=";
  if (tok.text.rfind(prefix, 0) != 0 || !all_digits(std::string_view(tok.text).substr(prefix.size()))) {
    throw ParseError(line, tok.column, "expected " + prefix + "<int>");
  }
  return std::stoi(tok.text.substr(prefix.size()));
}

}  // namespace

std::string passage_token(const TangleDiagram& d, const Passage& p) {
  std::string id = std::to_string(p.crossing);
  switch (p.role) {
    case Role::Over: return "O" + id + (d.sign(p.crossing) > 0 ? "+" : "-");
    case Role::Under: return "U" + id + (d.sign(p.crossing) > 0 ? "+" : "-");
    case Role::SingPrimary: return "X" + id;
    case Role::SingSecondary: return "Y" + id;
  }
  return "?";
}

TangleDiagram parse_diagram(std::string_view text) {
  TangleDiagram d;
  EventBuilder builder;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int last_line = 1;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_line(line);
    if (toks.empty()) continue;
    last_line = line_no;
    auto fail_at = [line_no](const Token& t, const std::string& msg) -> void {
      throw ParseError(line_no, t.column, msg);
    };
    if (!have_header) {
      if (toks[0].text != "tangle") fail_at(toks[0], "expected 'tangle m=<int> n=<int>' header");
      if (toks.size() != 3) fail_at(toks.back(), "header takes exactly m= and n=");
      d.top = parse_arity(toks[1], "m", line_no);
      d.bottom = parse_arity(toks[2], "n", line_no);
      have_header = true;
      continue;
    }
    if (toks[0].text != "component") fail_at(toks[0], "expected 'component'");
    if (toks.size() < 3) fail_at(toks.back(), "incomplete component line");
    if (!all_digits(toks[1].text) || std::stoul(toks[1].text) != d.components.size() + 1) {
      fail_at(toks[1], "expected component index " + std::to_string(d.components.size() + 1));
    }
    Component comp;
    std::size_t colon = 0;
    if (toks[2].text == "closed") {
      comp.kind = ComponentKind::Closed;
      colon = 3;
    } else if (toks[2].text == "long") {
      comp.kind = ComponentKind::Long;
      if (toks.size() < 7 || toks[3].text != "from" || toks[5].text != "to") {
        fail_at(toks[std::min<std::size_t>(3, toks.size() - 1)], "expected 'long from <slot> to <slot>'");
      }
      comp.from = parse_slot(toks[4].text);
      if (!comp.from) fail_at(toks[4], "bad slot '" + toks[4].text + "'");
      comp.to = parse_slot(toks[6].text);
      if (!comp.to) fail_at(toks[6], "bad slot '" + toks[6].text + "'");
      colon = 7;
    } else {
      fail_at(toks[2], "expected 'closed' or 'long'");
    }
    if (colon >= toks.size() || toks[colon].text != ":") {
      fail_at(toks[std::min(colon, toks.size() - 1)], "expected ':' before the event list");
    }
    for (std::size_t k = colon + 1; k < toks.size(); ++k) {
      const Token& t = toks[k];
      comp.events.push_back(builder.add(t.text, [&](const std::string& msg) { fail_at(t, msg); }));
    }
    d.components.push_back(std::move(comp));
  }
  if (!have_header) throw ParseError(last_line, 1, "missing 'tangle' header");
  d.crossings = builder.take();
  require_valid(d);
  return d;
}

std::string serialize(const TangleDiagram& d) {
  std::string out = "tangle m=" + std::to_string(d.top) + " n=" + std::to_string(d.bottom) + "\n";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Component& c = d.components[i];
    out += "component " + std::to_string(i + 1);
    if (c.is_closed()) {
      out += " closed :";
    } else {
      out += " long from " + c.from->to_string() + " to " + c.to->to_string() + " :";
    }
    for (const Passage& p : c.events) out += " " + passage_token(d, p);
    out += "\n";
  }
  return out;
}

nlohmann::json diagram_to_json(const TangleDiagram& d) {
  nlohmann::json comps = nlohmann::json::array();
  for (const Component& c : d.components) {
    nlohmann::json events = nlohmann::json::array();
    for (const Passage& p : c.events) events.push_back(passage_token(d, p));
    nlohmann::json jc = {{"kind", c.is_closed() ? "closed" : "long"}, {"events", events}};
    if (!c.is_closed()) {
      jc["from"] = c.from->to_string();
      jc["to"] = c.to->to_string();
    }
    comps.push_back(jc);
  }
  return {{"m", d.top}, {"n", d.bottom}, {"components", comps}};
}

TangleDiagram diagram_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::Syntax, "diagram JSON: " + msg); };
  TangleDiagram d;
  EventBuilder builder;
  try {
    d.top = j.at("m").get<int>();
    d.bottom = j.at("n").get<int>();
    for (const auto& jc : j.at("components")) {
      Component c;
      std::string kind = jc.at("kind").get<std::string>();
      if (kind == "closed") {
        c.kind = ComponentKind::Closed;
      } else if (kind == "long") {
        c.kind = ComponentKind::Long;
        c.from = parse_slot(jc.at("from").get<std::string>());
        c.to = parse_slot(jc.at("to").get<std::string>());
        if (!c.from || !c.to) fail("bad slot");
      } else {
        fail("component kind must be 'closed' or 'long'");
      }
      for (const auto& tok : jc.at("events")) c.events.push_back(builder.add(tok.get<std::string>(), fail));
      d.components.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  }
  d.crossings = builder.take();
  require_valid(d);
  return d;
}

TangleDiagram parse_diagram_any(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::Syntax, std::string("diagram JSON: ") + e.what());
    }
    return diagram_from_json(j);
  }
  return parse_diagram(text);
}

TangleDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Syntax, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram_any(buf.str());
}

}  // namespace maip
