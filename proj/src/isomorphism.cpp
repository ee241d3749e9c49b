#include "loom/isomorphism.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace loom {

namespace {

bool triple_has_blank(const Triple& t) {
  return std::holds_alternative<BlankNode>(t.subject) || is_blank(t.object);
}

struct SplitGraph {
  std::vector<Triple> ground;
  std::vector<Triple> blank;
  std::vector<std::string> labels;  // sorted blank labels
};

SplitGraph split(const Graph& g) {
  SplitGraph out;
  std::set<std::string> labels;
  for (const auto& t : g) {
    if (triple_has_blank(t)) {
      out.blank.push_back(t);
      if (const auto* b = std::get_if<BlankNode>(&t.subject)) labels.insert(b->label());
      if (const auto* b = std::get_if<BlankNode>(&t.object)) labels.insert(b->label());
    } else {
      out.ground.push_back(t);
    }
  }
  out.labels.assign(labels.begin(), labels.end());
  return out;
}

// Signature refinement: each blank node starts with a hash of its incident
// ground context and is refined by its neighbours' colors until stable.
std::map<std::string, std::size_t> refine_colors(const std::vector<Triple>& blank_triples,
                                                 const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> color;
  std::hash<std::string> h;

  auto term_token = [](const Term& t) -> std::string {
    if (is_blank(t)) return "*";
    if (const auto* l = std::get_if<Literal>(&t)) {
      std::string tag;
      if (l->language()) {
        for (char c : *l->language()) {
          tag += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
      }
      return "L|" + l->lexical() + "|" + l->datatype().str() + "|" + tag;
    }
    return term_to_string(t);
  };

  for (const auto& l : labels) color[l] = 0;
  for (const auto& t : blank_triples) {
    std::string pred = "<" + t.predicate.str() + ">";
    if (const auto* b = std::get_if<BlankNode>(&t.subject)) {
      color[b->label()] ^= h("s|" + pred + "|" + term_token(t.object));
    }
    if (const auto* b = std::get_if<BlankNode>(&t.object)) {
      color[b->label()] ^=
          h("o|" + pred + "|" + term_token(to_term(t.subject)));
    }
  }

  for (int round = 0; round < 8; ++round) {
    std::map<std::string, std::vector<std::size_t>> gathered;
    for (const auto& t : blank_triples) {
      const auto* sb = std::get_if<BlankNode>(&t.subject);
      const auto* ob = std::get_if<BlankNode>(&t.object);
      std::size_t p = h(t.predicate.str());
      if (sb && ob) {
        gathered[sb->label()].push_back(p * 3 + color[ob->label()] * 7 + 1);
        gathered[ob->label()].push_back(p * 3 + color[sb->label()] * 7 + 2);
      } else if (sb) {
        gathered[sb->label()].push_back(p * 3 + 5);
      } else if (ob) {
        gathered[ob->label()].push_back(p * 3 + 6);
      }
    }
    std::map<std::string, std::size_t> next;
    bool changed = false;
    for (const auto& l : labels) {
      auto& v = gathered[l];
      std::sort(v.begin(), v.end());
      std::size_t acc = color[l];
      for (auto x : v) acc = acc * 1099511628211ULL + x;
      next[l] = acc;
      if (acc != color[l]) changed = true;
    }
    color = std::move(next);
    if (!changed) break;
  }
  return color;
}

Term rename_term(const Term& t, const std::map<std::string, std::string>& m) {
  if (const auto* b = std::get_if<BlankNode>(&t)) {
    auto it = m.find(b->label());
    if (it != m.end()) return BlankNode(it->second);
  }
  return t;
}

bool mapping_works(const std::vector<Triple>& a, const std::set<Triple>& b,
                   const std::map<std::string, std::string>& m) {
  for (const auto& t : a) {
    Triple renamed{to_resource(rename_term(to_term(t.subject), m)), t.predicate,
                   rename_term(t.object, m)};
    if (b.find(renamed) == b.end()) return false;
  }
  return true;
}

bool match_blanks(const SplitGraph& a, const SplitGraph& b) {
  if (a.blank.size() != b.blank.size() || a.labels.size() != b.labels.size()) return false;
  if (a.labels.empty()) return a.blank == b.blank;

  auto ca = refine_colors(a.blank, a.labels);
  auto cb = refine_colors(b.blank, b.labels);

  // Group by color; the multisets of colors must match.
  std::map<std::size_t, std::vector<std::string>> ga, gb;
  for (const auto& [l, c] : ca) ga[c].push_back(l);
  for (const auto& [l, c] : cb) gb[c].push_back(l);
  if (ga.size() != gb.size()) return false;
  for (const auto& [c, v] : ga) {
    auto it = gb.find(c);
    if (it == gb.end() || it->second.size() != v.size()) return false;
  }

  std::set<Triple> b_set(b.blank.begin(), b.blank.end());

  // Backtrack within color classes. Classes are usually singletons after
  // refinement, so this stays cheap in practice.
  std::map<std::string, std::string> assignment;
  std::set<std::string> used;
  std::vector<std::pair<std::size_t, std::string>> order;
  for (const auto& [c, v] : ga) {
    for (const auto& l : v) order.emplace_back(c, l);
  }

  std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
    if (idx == order.size()) return mapping_works(a.blank, b_set, assignment);
    const auto& [c, la] = order[idx];
    for (const auto& lb : gb[c]) {
      if (used.count(lb)) continue;
      assignment[la] = lb;
      used.insert(lb);
      if (rec(idx + 1)) return true;
      used.erase(lb);
      assignment.erase(la);
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  SplitGraph sa = split(a);
  SplitGraph sb = split(b);
  if (sa.ground != sb.ground) return false;
  return match_blanks(sa, sb);
}

std::string describe_difference(const Graph& actual, const Graph& expected) {
  if (isomorphic(actual, expected)) return "";
  std::ostringstream out;
  SplitGraph sa = split(actual);
  SplitGraph sb = split(expected);

  std::set<Triple> ea(sa.ground.begin(), sa.ground.end());
  std::set<Triple> eb(sb.ground.begin(), sb.ground.end());
  for (const auto& t : ea) {
    if (!eb.count(t)) out << "unexpected: " << triple_to_string(t) << "\n";
  }
  for (const auto& t : eb) {
    if (!ea.count(t)) out << "missing:    " << triple_to_string(t) << "\n";
  }
  if (sa.blank.size() != sb.blank.size()) {
    out << "blank-node triples: got " << sa.blank.size() << ", want " << sb.blank.size() << "\n";
  } else if (!sa.blank.empty()) {
    out << "blank-node portions of the graphs do not align (" << sa.blank.size()
        << " triples each)\n";
    for (const auto& t : sa.blank) out << "  got:  " << triple_to_string(t) << "\n";
    for (const auto& t : sb.blank) out << "  want: " << triple_to_string(t) << "\n";
  }
  if (actual.size() != expected.size()) {
    out << "sizes differ: got " << actual.size() << ", want " << expected.size() << "\n";
  }
  return out.str();
}

}  // namespace loom
