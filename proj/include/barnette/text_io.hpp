#pragma once

// Line-oriented `key: value` records used for sidecar files: correspondence
// maps, face sets, cycles with side tables, face trees and A-trails.

#include <map>

#include "barnette/face_trees.hpp"
#include "barnette/pg_format.hpp"

namespace barnette {

class Record {
 public:
  Record& set(const std::string& key, const std::string& value) {
    require(key.find(':') == std::string::npos && key.find('\n') == std::string::npos, "bad record key '" + key + "'");
    for (auto& [k, v] : entries_)
      if (k == key) {
        v = value;
        return *this;
      }
    entries_.emplace_back(key, value);
    return *this;
  }
  template <class Int>
    requires std::is_integral_v<Int>
  Record& set(const std::string& key, Int value) {
    if constexpr (std::is_same_v<Int, bool>)
      return set(key, std::string(value ? "true" : "false"));
    else
      return set(key, std::to_string(value));
  }
  Record& set(const std::string& key, const char* value) { return set(key, std::string(value)); }
  template <class Int>
    requires std::is_integral_v<Int>
  Record& set(const std::string& key, const std::vector<Int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + std::to_string(values[i]);
    return set(key, s);
  }

  bool has(const std::string& key) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.first == key; });
  }
  const std::string& get(const std::string& key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return v;
    throw InputError("record has no key '" + key + "'");
  }
  std::vector<int> ints(const std::string& key) const {
    std::vector<int> out;
    std::istringstream in(get(key));
    std::string tok;
    while (in >> tok) out.push_back(detail::parse_int(tok, key));
    return out;
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string str() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + ":" + (v.empty() ? "" : " " + v) + "\n";
    return out;
  }

  static Record parse(const std::string& text) {
    Record r;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = detail::trim(line);
      if (t.empty() || t[0] == '#') continue;
      const auto colon = t.find(':');
      if (colon == std::string::npos) throw InputError("record line " + std::to_string(line_no) + " has no ':'");
      r.set(detail::trim(t.substr(0, colon)), detail::trim(t.substr(colon + 1)));
    }
    return r;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

inline Record to_record(const HamCycleWithSides& c) {
  std::string sides;
  for (Side s : c.side) sides += s == Side::inside ? 'i' : 'o';
  return Record().set("cycle", c.cycle).set("sides", sides);
}

inline HamCycleWithSides cycle_from_record(const PlaneGraph& g, const Record& r) {
  HamCycleWithSides c = with_sides(g, r.ints("cycle"));
  if (r.has("sides")) {
    std::string want;
    for (Side s : c.side) want += s == Side::inside ? 'i' : 'o';
    require(r.get("sides") == want, "side table does not match the cycle");
  }
  return c;
}

inline Record to_record(const FaceTree& ft) { return Record().set("faces", ft.faces).set("proper", ft.proper); }

inline FaceTree face_tree_from_record(const Record& r) {
  FaceTree ft{r.ints("faces"), r.ints("proper")};
  ft.canonicalize();
  return ft;
}

inline Record to_record(const FaceColoring& c) { return Record().set("palette", c.palette).set("colors", c.color); }

inline FaceColoring coloring_from_record(const PlaneGraph& g, const Record& r) {
  const std::vector<int> palette = r.ints("palette");
  require(palette.size() == 1, "palette must be a single integer");
  FaceColoring c{palette[0], r.ints("colors")};
  require(static_cast<int>(c.color.size()) == g.face_count(), "colouring has the wrong number of faces");
  require(is_proper(g, c), "colouring is not proper");
  return c;
}

/// A-trails: one dart-index sequence per line.
inline std::string write_trails(const std::vector<ATrail>& trails) {
  std::string out;
  for (const auto& t : trails) {
    for (std::size_t i = 0; i < t.darts.size(); ++i) out += (i ? " " : "") + std::to_string(t.darts[i]);
    out += "\n";
  }
  return out;
}

inline std::vector<ATrail> parse_trails(const std::string& text) {
  std::vector<ATrail> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    ATrail trail;
    std::istringstream ls(t);
    std::string tok;
    while (ls >> tok) trail.darts.push_back(detail::parse_int(tok, "dart index"));
    out.push_back(std::move(trail));
  }
  return out;
}

}  // namespace barnette
