#include "sdlkit/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace sdlkit::io {

namespace {

std::string located(std::size_t line, std::size_t column, const std::string& message) {
  std::ostringstream os;
  os << "line " << line << ", column " << column << ": " << message;
  return os.str();
}

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) lines_.push_back({number, line});
      if (end == text.size()) break;
      start = end + 1;
    }
    // The line just past the content: after a trailing newline that is the
    // empty final segment itself.
    eof_line_ = text.empty() || text.back() == '\n' ? number : number + 1;
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

  const Line& next(std::string_view expecting) {
    if (done())
      throw ParseError(eof_line_, 1,
                       "unexpected end of file, expected " + std::string(expecting));
    return lines_[pos_++];
  }

  static std::vector<Token> tokens(const Line& line, std::size_t from = 0) {
    std::vector<Token> out;
    const std::string& s = line.text;
    std::size_t i = from;
    while (i < s.size()) {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
      if (i == s.size()) break;
      std::size_t j = i;
      while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
      out.push_back({s.substr(i, j - i), i + 1});
      i = j;
    }
    return out;
  }

  // Reads `key: value...` and returns the value tokens.
  std::vector<Token> keyed(std::string_view key) {
    const Line& line = next(std::string(key) + ":");
    return keyed_value(line, key);
  }

  static std::vector<Token> keyed_value(const Line& line, std::string_view key) {
    const std::size_t first = line.text.find_first_not_of(" \t");
    const std::size_t colon = line.text.find(':');
    std::string found;
    if (colon != std::string::npos) {
      found = line.text.substr(first, colon - first);
      while (!found.empty() && (found.back() == ' ' || found.back() == '\t')) found.pop_back();
    }
    if (colon == std::string::npos || found != key)
      throw ParseError(line.number, first + 1, "expected '" + std::string(key) + ":'");
    return tokens(line, colon + 1);
  }

  // Key of the next line without consuming it.
  std::string peek_key() const {
    if (done()) return {};
    const auto& text = peek().text;
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) return {};
    const std::size_t first = text.find_first_not_of(" \t");
    std::string k = text.substr(first, colon - first);
    while (!k.empty() && (k.back() == ' ' || k.back() == '\t')) k.pop_back();
    return k;
  }

  const Line& previous() const { return lines_[pos_ - 1]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t eof_line_ = 0;
};

std::size_t to_index(const Line& line, const Token& t) {
  std::size_t value = 0;
  const char* b = t.text.data();
  const char* e = b + t.text.size();
  auto [p, ec] = std::from_chars(b, e, value);
  if (ec != std::errc() || p != e)
    throw ParseError(line.number, t.column, "expected a non-negative integer, got '" + t.text + "'");
  return value;
}

const Token& single(const Line& line, const std::vector<Token>& tokens, std::string_view what) {
  if (tokens.size() != 1) {
    const std::size_t col = tokens.empty() ? line.text.size() + 1 : tokens[1 % tokens.size()].column;
    throw ParseError(line.number, col, "expected exactly one " + std::string(what));
  }
  return tokens.front();
}

std::string expect_word(const Line& line, const std::vector<Token>& tokens, std::string_view what) {
  return single(line, tokens, what).text;
}

std::size_t read_size(Reader& r) {
  auto tokens = r.keyed("size");
  const Line& line = r.previous();
  const std::size_t n = to_index(line, single(line, tokens, "size"));
  if (n == 0) throw ParseError(line.number, tokens.front().column, "size must be at least 1");
  return n;
}

std::vector<std::string> read_names(Reader& r, std::size_t n) {
  auto tokens = r.keyed("names");
  const Line& line = r.previous();
  if (tokens.size() != n) {
    std::ostringstream os;
    os << "expected " << n << " names, got " << tokens.size();
    throw ParseError(line.number, tokens.size() > n ? tokens[n].column : line.text.size() + 1,
                     os.str());
  }
  std::set<std::string> seen;
  std::vector<std::string> names;
  for (const auto& t : tokens) {
    if (!seen.insert(t.text).second)
      throw ParseError(line.number, t.column, "duplicate name '" + t.text + "'");
    names.push_back(t.text);
  }
  return names;
}

std::vector<Element> read_row(Reader& r, std::size_t length, std::size_t bound,
                              std::string_view what) {
  const Line& line = r.next(what);
  const auto tokens = Reader::tokens(line);
  if (tokens.size() != length) {
    std::ostringstream os;
    os << what << " has " << tokens.size() << " entries, expected " << length;
    throw ParseError(line.number, tokens.size() > length ? tokens[length].column : 1, os.str());
  }
  std::vector<Element> row;
  for (const auto& t : tokens) {
    const std::size_t v = to_index(line, t);
    if (v >= bound) {
      std::ostringstream os;
      os << "index " << v << " out of range (must be < " << bound << ")";
      throw ParseError(line.number, t.column, os.str());
    }
    row.push_back(v);
  }
  return row;
}

BinaryOpTable read_table(Reader& r, std::string_view name, std::size_t n) {
  auto tokens = r.keyed("table");
  const Line& header = r.previous();
  const std::string found = expect_word(header, tokens, "table name");
  if (found != name)
    throw ParseError(header.number, tokens.front().column,
                     "expected table '" + std::string(name) + "', got '" + found + "'");
  std::vector<Element> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = read_row(r, n, n, "table row");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return BinaryOpTable(n, std::move(entries));
}

Element lookup(const Line& line, const Token& t, const std::vector<std::string>& names) {
  for (Element i = 0; i < names.size(); ++i)
    if (names[i] == t.text) return i;
  throw ParseError(line.number, t.column, "unknown element name '" + t.text + "'");
}

LatticeFile read_lattice_body(Reader& r) {
  const std::size_t n = read_size(r);
  auto names = read_names(r, n);
  auto join = read_table(r, "join", n);
  auto meet = read_table(r, "meet", n);
  return {std::move(names), std::move(join), std::move(meet)};
}

GroupFile read_group_body(Reader& r) {
  const std::size_t n = read_size(r);
  auto names = read_names(r, n);
  return {std::move(names), read_table(r, "op", n)};
}

SemiringFile read_semiring_body(Reader& r) {
  const std::size_t n = read_size(r);
  auto names = read_names(r, n);
  std::optional<std::vector<Label>> labels;
  if (r.peek_key() == "labels") {
    auto tokens = r.keyed("labels");
    const Line& line = r.previous();
    if (tokens.size() != n)
      throw ParseError(line.number, tokens.size() > n ? tokens[n].column : line.text.size() + 1,
                       "expected one label per element");
    labels.emplace();
    for (const auto& t : tokens) {
      const auto colon = t.text.find(':');
      if (colon == std::string::npos)
        throw ParseError(line.number, t.column, "label must have the form component:element");
      Token a{t.text.substr(0, colon), t.column};
      Token g{t.text.substr(colon + 1), t.column + colon + 1};
      labels->push_back({to_index(line, a), to_index(line, g)});
    }
  }
  auto add = read_table(r, "add", n);
  auto mul = read_table(r, "mul", n);
  return {std::move(names), std::move(add), std::move(mul), std::move(labels)};
}

FamilyFile read_family_body(Reader& r) {
  FamilyFile f{read_lattice_body(r), {}, {}};
  const auto& lnames = f.lattice.names;
  for (Element a = 0; a < lnames.size(); ++a) {
    auto tokens = r.keyed("component");
    const Line& line = r.previous();
    const Token& t = single(line, tokens, "component name");
    if (t.text != lnames[a])
      throw ParseError(line.number, t.column,
                       "expected component '" + lnames[a] + "', got '" + t.text + "'");
    f.components.push_back(read_group_body(r));
  }
  while (!r.done()) {
    auto tokens = r.keyed("map");
    const Line& line = r.previous();
    if (tokens.size() != 2)
      throw ParseError(line.number, tokens.empty() ? line.text.size() + 1 : tokens.front().column,
                       "expected 'map: <from> <to>'");
    const Element from = lookup(line, tokens[0], lnames);
    const Element to = lookup(line, tokens[1], lnames);
    auto targets = read_row(r, f.components[from].op.size(), f.components[to].op.size(), "map row");
    f.maps.push_back({from, to, std::move(targets)});
  }
  return f;
}

InstanceSpecFile read_instance_spec_body(Reader& r) {
  InstanceSpec spec;
  {
    auto tokens = r.keyed("lattice");
    const Line& line = r.previous();
    if (tokens.size() != 2)
      throw ParseError(line.number, 1, "expected 'lattice: <chain|boolean|divisor> <n>'");
    const auto& kind = tokens[0].text;
    if (kind == "chain") spec.lattice = LatticeKind::Chain;
    else if (kind == "boolean") spec.lattice = LatticeKind::Boolean;
    else if (kind == "divisor") spec.lattice = LatticeKind::Divisor;
    else throw ParseError(line.number, tokens[0].column, "unknown lattice kind '" + kind + "'");
    spec.lattice_param = to_index(line, tokens[1]);
  }
  {
    auto tokens = r.keyed("group");
    const Line& line = r.previous();
    if (tokens.empty()) throw ParseError(line.number, 1, "expected 'group: <cyclic n|klein|s3>'");
    const auto& kind = tokens[0].text;
    if (kind == "cyclic" && tokens.size() == 2) {
      spec.group = GroupKind::Cyclic;
      spec.group_param = to_index(line, tokens[1]);
    } else if (kind == "klein" && tokens.size() == 1) {
      spec.group = GroupKind::Klein;
      spec.group_param = 4;
    } else if (kind == "s3" && tokens.size() == 1) {
      spec.group = GroupKind::Symmetric3;
      spec.group_param = 6;
    } else {
      throw ParseError(line.number, tokens[0].column, "unknown group '" + kind + "'");
    }
  }
  {
    auto tokens = r.keyed("recipe");
    const Line& line = r.previous();
    const std::string word = expect_word(line, tokens, "recipe");
    if (word == "identity") spec.recipe = Recipe::Identity;
    else if (word == "twisted") spec.recipe = Recipe::Twisted;
    else throw ParseError(line.number, tokens[0].column, "unknown recipe '" + word + "'");
  }
  {
    auto tokens = r.keyed("flavor");
    const Line& line = r.previous();
    const std::string word = expect_word(line, tokens, "flavor");
    if (word == "left") spec.flavor = AddFlavor::LeftZero;
    else if (word == "right") spec.flavor = AddFlavor::RightZero;
    else throw ParseError(line.number, tokens[0].column, "unknown flavor '" + word + "'");
  }
  return {spec};
}

void write_names(std::ostream& os, const std::vector<std::string>& names) {
  os << "names:";
  for (const auto& n : names) os << ' ' << n;
  os << '\n';
}

void write_table(std::ostream& os, std::string_view name, const BinaryOpTable& t) {
  os << "table: " << name << '\n';
  for (Element x = 0; x < t.size(); ++x) {
    for (Element y = 0; y < t.size(); ++y) os << (y ? " " : "") << t(x, y);
    os << '\n';
  }
}

void write_group_body(std::ostream& os, const GroupFile& g) {
  os << "size: " << g.op.size() << '\n';
  write_names(os, g.names);
  write_table(os, "op", g.op);
}

void write_lattice_body(std::ostream& os, const LatticeFile& l) {
  os << "size: " << l.join.size() << '\n';
  write_names(os, l.names);
  write_table(os, "join", l.join);
  write_table(os, "meet", l.meet);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(located(line, column, message)), line_(line), column_(column) {}

Structure parse(std::string_view text) {
  Reader r(text);
  auto tokens = r.keyed("kind");
  const Line& line = r.previous();
  const std::string kind = expect_word(line, tokens, "kind");
  const std::size_t kind_column = tokens.front().column;

  Structure s = [&]() -> Structure {
    try {
      if (kind == "semigroup") {
        auto g = read_group_body(r);
        return SemigroupFile{std::move(g.names), std::move(g.op)};
      }
      if (kind == "group") return read_group_body(r);
      if (kind == "lattice") return read_lattice_body(r);
      if (kind == "semiring") return read_semiring_body(r);
      if (kind == "iso-family") return read_family_body(r);
      if (kind == "instance-spec") return read_instance_spec_body(r);
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.previous().number, 1, e.what());
    }
    throw ParseError(line.number, kind_column, "unknown kind '" + kind + "'");
  }();
  if (!r.done()) throw ParseError(r.peek().number, 1, "unexpected content after structure");
  return s;
}

const char* kind_tag(const Structure& structure) {
  struct Visitor {
    const char* operator()(const SemigroupFile&) const { return "semigroup"; }
    const char* operator()(const GroupFile&) const { return "group"; }
    const char* operator()(const LatticeFile&) const { return "lattice"; }
    const char* operator()(const SemiringFile&) const { return "semiring"; }
    const char* operator()(const FamilyFile&) const { return "iso-family"; }
    const char* operator()(const InstanceSpecFile&) const { return "instance-spec"; }
  };
  return std::visit(Visitor{}, structure);
}

std::string serialize(const Structure& structure) {
  std::ostringstream os;
  os << "kind: " << kind_tag(structure) << '\n';
  struct Visitor {
    std::ostream& os;
    void operator()(const SemigroupFile& f) const { write_group_body(os, {f.names, f.op}); }
    void operator()(const GroupFile& f) const { write_group_body(os, f); }
    void operator()(const LatticeFile& f) const { write_lattice_body(os, f); }
    void operator()(const SemiringFile& f) const {
      os << "size: " << f.add.size() << '\n';
      write_names(os, f.names);
      if (f.labels) {
        os << "labels:";
        for (const auto& l : *f.labels) os << ' ' << l.component << ':' << l.element;
        os << '\n';
      }
      write_table(os, "add", f.add);
      write_table(os, "mul", f.mul);
    }
    void operator()(const FamilyFile& f) const {
      write_lattice_body(os, f.lattice);
      for (std::size_t a = 0; a < f.components.size(); ++a) {
        os << "component: " << f.lattice.names[a] << '\n';
        write_group_body(os, f.components[a]);
      }
      for (const auto& m : f.maps) {
        os << "map: " << f.lattice.names[m.from] << ' ' << f.lattice.names[m.to] << '\n';
        for (std::size_t i = 0; i < m.targets.size(); ++i) os << (i ? " " : "") << m.targets[i];
        os << '\n';
      }
    }
    void operator()(const InstanceSpecFile& f) const {
      const auto& s = f.spec;
      os << "lattice: ";
      switch (s.lattice) {
        case LatticeKind::Chain: os << "chain"; break;
        case LatticeKind::Boolean: os << "boolean"; break;
        case LatticeKind::Divisor: os << "divisor"; break;
      }
      os << ' ' << s.lattice_param << '\n' << "group: ";
      switch (s.group) {
        case GroupKind::Cyclic: os << "cyclic " << s.group_param; break;
        case GroupKind::Klein: os << "klein"; break;
        case GroupKind::Symmetric3: os << "s3"; break;
      }
      os << '\n'
         << "recipe: " << (s.recipe == Recipe::Identity ? "identity" : "twisted") << '\n'
         << "flavor: " << to_string(s.flavor) << '\n';
    }
  };
  std::visit(Visitor{os}, structure);
  return os.str();
}

std::vector<std::string> index_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

FamilyInstance to_family(const FamilyFile& file) {
  auto lattice = FiniteDistributiveLattice::from_tables(file.lattice.join, file.lattice.meet);
  std::vector<FiniteGroup> groups;
  for (std::size_t a = 0; a < file.components.size(); ++a) {
    auto g = check_group(file.components[a].op);
    if (!g.group)
      throw std::invalid_argument("component " + file.lattice.names[a] +
                                  " is not a group: " + describe(g.verdict));
    groups.push_back(std::move(*g.group));
  }
  IsoFamily phi;
  for (const auto& m : file.maps) {
    if (phi.contains(m.from, m.to))
      throw std::invalid_argument("duplicate map " + file.lattice.names[m.from] + " " +
                                  file.lattice.names[m.to]);
    phi.set(m.from, m.to, HomMap(groups[m.to].order(), m.targets));
  }
  return {GroupComponentFamily(std::move(lattice), std::move(groups)), std::move(phi)};
}

FamilyFile to_file(const FamilyInstance& instance, std::vector<std::string> lattice_names,
                   std::vector<std::vector<std::string>> component_names) {
  const auto& fam = instance.family;
  FamilyFile f{to_file(fam.lattice(), std::move(lattice_names)), {}, {}};
  for (Element a = 0; a < fam.lattice().size(); ++a) {
    auto names = a < component_names.size() ? component_names[a]
                                             : index_names(fam.component(a).order());
    f.components.push_back({std::move(names), fam.component(a).op()});
  }
  for (const auto& [key, map] : instance.phi.maps())
    f.maps.push_back({key.first, key.second, map.map()});
  return f;
}

LatticeFile to_file(const FiniteDistributiveLattice& lattice, std::vector<std::string> names) {
  if (names.empty()) names = index_names(lattice.size());
  return {std::move(names), lattice.join(), lattice.meet()};
}

SemiringFile to_file(const SemiringTable& s, const std::vector<std::string>& lattice_names,
                     const std::vector<std::vector<std::string>>& component_names) {
  std::vector<std::string> names;
  if (s.labeling) {
    for (const auto& l : *s.labeling) {
      const std::string a =
          l.component < lattice_names.size() ? lattice_names[l.component] : std::to_string(l.component);
      const std::string g = l.component < component_names.size() &&
                                    l.element < component_names[l.component].size()
                                ? component_names[l.component][l.element]
                                : std::to_string(l.element);
      names.push_back(a + "." + g);
    }
  } else {
    names = index_names(s.size());
  }
  return {std::move(names), s.add, s.mul, s.labeling};
}

SemiringTable to_semiring(const SemiringFile& file) {
  if (file.add.size() != file.mul.size())
    throw std::invalid_argument("addition and multiplication tables differ in size");
  return {file.add, file.mul, file.labels};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << contents;
  if (!out) throw IoError("error writing " + path);
}

}  // namespace sdlkit::io
