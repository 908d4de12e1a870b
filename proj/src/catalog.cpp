#include "eqtri/catalog.hpp"

#include <fstream>
#include <sstream>

namespace eqtri {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// serialization

std::string serialize_complex(const Complex& X) {
  std::string out;
  for (const auto& f : X.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += f.vertices()[i];
    }
    out += '\n';
  }
  return out;
}

std::string serialize_action(const GroupAction& A) {
  std::string out;
  for (const auto& g : A.generators()) {
    out += "gen ";
    out += g.name;
    out += ": ";
    out += g.perm.str();
    out += '\n';
  }
  return out;
}

std::string serialize_positions(const std::map<VertexToken, RationalPoint>& pos) {
  std::string out;
  for (const auto& [tok, p] : pos) {
    out += tok;
    for (const auto& coord : p) {
      out += ' ';
      out += format_rational(coord);
    }
    out += '\n';
  }
  return out;
}

namespace {

// Strips a '#' comment and splits the remainder on whitespace.
std::vector<std::string> tokenize_line(const std::string& raw) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(std::move(t));
  return toks;
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

}  // namespace

Complex parse_complex(const std::string& text, std::vector<std::string>* warnings) {
  std::vector<Simplex> facets;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokenize_line(lines[i]);
    if (toks.empty()) continue;
    try {
      facets.push_back(Simplex::of(toks));
    } catch (const Error& e) {
      std::string what = e.what();
      std::string prefix = std::string(error_kind_name(e.kind())) + ": ";
      if (what.starts_with(prefix)) what.erase(0, prefix.size());
      throw Error(e.kind(), "line " + std::to_string(i + 1) + ": " + what);
    }
  }
  if (facets.empty()) parse_fail(lines.size() + 1, "no facets found");
  return complex_from_simplices(facets, warnings);
}

Complex read_complex_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str(), warnings);
}

void write_complex_file(const Complex& X, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot open '" + path + "' for writing");
  out << serialize_complex(X);
}

namespace {

// Parses a cycle string like "(5 6)(7 8)(a c)" or "id".
Permutation parse_cycles_text(const std::string& text, std::size_t lineno) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s == "id" || s == "()") return Permutation{};
  std::vector<std::vector<VertexToken>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') parse_fail(lineno, "expected '(' in cycle notation");
    auto close = s.find(')', i);
    if (close == std::string::npos) parse_fail(lineno, "unbalanced '(' in cycle notation");
    std::istringstream cyc(s.substr(i + 1, close - i - 1));
    std::vector<VertexToken> toks;
    std::string t;
    while (cyc >> t) toks.push_back(t);
    if (toks.size() < 2) parse_fail(lineno, "cycle needs at least two tokens");
    cycles.push_back(std::move(toks));
    i = close + 1;
  }
  try {
    return Permutation::from_cycles(cycles);
  } catch (const Error& e) {
    parse_fail(lineno, e.what());
  }
}

}  // namespace

GroupAction parse_action(const std::string& text) {
  std::vector<NamedPermutation> gens;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    // skip blank
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;

    std::istringstream in(line);
    std::string kw, name;
    in >> kw;
    if (kw != "gen") parse_fail(i + 1, "expected 'gen <name>: <cycles>'");
    in >> name;
    if (name.empty()) parse_fail(i + 1, "missing generator name");
    if (name.back() == ':') name.pop_back();
    if (name.empty()) parse_fail(i + 1, "missing generator name");
    std::string rest;
    std::getline(in, rest);
    // strip a leading colon if it was separated by whitespace
    std::size_t p = 0;
    while (p < rest.size() && std::isspace(static_cast<unsigned char>(rest[p]))) ++p;
    if (p < rest.size() && rest[p] == ':') ++p;
    gens.push_back(NamedPermutation{name, parse_cycles_text(rest.substr(p), i + 1)});
  }
  if (gens.empty()) throw Error(ErrorKind::Parse, "no generators found");
  return GroupAction::from_generators(gens);
}

GroupAction read_action_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_action(buf.str());
}

void write_action_file(const GroupAction& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot open '" + path + "' for writing");
  out << serialize_action(A);
}

std::map<VertexToken, RationalPoint> parse_positions(const std::string& text) {
  std::map<VertexToken, RationalPoint> pos;
  auto lines = split_lines(text);
  std::size_t expected_dim = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto toks = tokenize_line(lines[i]);
    if (toks.empty()) continue;
    if (toks.size() < 2) parse_fail(i + 1, "expected '<token> <coord> ...'");
    VertexToken v = toks[0];
    if (!valid_token(v)) parse_fail(i + 1, "bad vertex token '" + v + "'");
    if (pos.count(v)) parse_fail(i + 1, "duplicate position for '" + v + "'");
    RationalPoint p;
    for (std::size_t j = 1; j < toks.size(); ++j) {
      try {
        p.push_back(parse_rational(toks[j]));
      } catch (const Error& e) {
        parse_fail(i + 1, e.what());
      }
    }
    if (expected_dim == 0)
      expected_dim = p.size();
    else if (p.size() != expected_dim)
      parse_fail(i + 1, "inconsistent coordinate count");
    pos.emplace(std::move(v), std::move(p));
  }
  if (pos.empty()) throw Error(ErrorKind::Parse, "no positions found");
  return pos;
}

std::map<VertexToken, RationalPoint> read_positions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_positions(buf.str());
}

void write_positions_file(const std::map<VertexToken, RationalPoint>& pos,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot open '" + path + "' for writing");
  out << serialize_positions(pos);
}

// ---------------------------------------------------------------------------
// built-in fixtures

namespace {

// Facet lists for the three real-projective-space triangulations, one facet
// per entry, one character per vertex token.
const char* const kK16Facets[] = {
    "158a", "15af", "18ae", "167c", "16ce", "17cf", "158c", "15cf", "18ce", "167a", "17af",
    "16ae", "256b", "25bf", "26be", "278d", "27df", "28de", "256d", "25df", "26de", "278b",
    "27bf", "28be", "3abg", "3bcg", "3cdg", "3adg", "3abh", "3bch", "3cdh", "3adh", "456g",
    "467g", "478g", "458g", "456h", "467h", "478h", "458h", "56bg", "67cg", "78dg", "58ag",
    "56dh", "67ah", "78bh", "58ch", "5abf", "5abg", "6bce", "6bcg", "7cdf", "8ade", "5cdf",
    "5cdh", "6ade", "6adh", "7abf", "8bce", "7cdg", "7abh", "8adg", "8bch"};

const char* const kK14Facets[] = {
    "158a", "157a", "168a", "167c", "168c", "158c", "157c", "167a", "256b", "257b", "268b",
    "278d", "257d", "268d", "256d", "278b", "3abg", "3bcg", "3cdg", "3adg", "3abh", "3bch",
    "3cdh", "3adh", "456g", "467g", "478g", "458g", "456h", "467h", "478h", "458h", "56bg",
    "67cg", "78dg", "58ag", "57ab", "57cd", "56dh", "68ad", "68bc", "67ah", "78bh", "58ch",
    "5abg", "5cdh", "6bcg", "6adh", "7cdg", "7abh", "8adg", "8bch"};

const char* const kK11Facets[] = {
    "57ac", "68ac", "67ac", "58ac", "56bd", "57bd", "68bd", "78bd", "abgh", "bcgh",
    "cdgh", "adgh", "456g", "467g", "478g", "458g", "456h", "467h", "478h", "458h",
    "56bg", "67cg", "78dg", "58ag", "57ab", "57cd", "56dh", "68ad", "68bc", "67ah",
    "78bh", "58ch", "5abg", "5cdh", "6bcg", "6adh", "7cdg", "7abh", "8adg", "8bch"};

const char* const kRP26Facets[] = {"123", "134", "145", "156", "126",
                                   "235", "346", "245", "356", "246"};

template <std::size_t N>
Complex complex_from_compact(const char* const (&rows)[N]) {
  std::vector<Simplex> facets;
  facets.reserve(N);
  for (const char* row : rows) {
    std::vector<VertexToken> toks;
    for (const char* p = row; *p; ++p) toks.emplace_back(1, *p);
    facets.push_back(Simplex::of(toks));
  }
  return complex_from_simplices(facets);
}

GroupAction k16_action() {
  return GroupAction::from_generators({
      {"m1", Permutation::from_cycles({{"5", "6"}, {"7", "8"}, {"e", "f"}, {"a", "c"}})},
      {"m2", Permutation::from_cycles({{"5", "8"}, {"6", "7"}, {"e", "f"}, {"b", "d"}})},
      {"m3", Permutation::from_cycles({{"a", "c"}, {"b", "d"}, {"g", "h"}})},
  });
}

GroupAction k14_action() {
  return GroupAction::from_generators({
      {"m1", Permutation::from_cycles({{"5", "6"}, {"7", "8"}, {"a", "c"}})},
      {"m2", Permutation::from_cycles({{"5", "8"}, {"6", "7"}, {"b", "d"}})},
      {"m3", Permutation::from_cycles({{"a", "c"}, {"b", "d"}, {"g", "h"}})},
  });
}

VertexToken xp_token(int axis, bool positive) {
  return (positive ? "+" : "-") + std::to_string(axis);
}

Fixture cross_polytope_fixture(int n) {
  std::vector<Simplex> facets;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<VertexToken> toks;
    for (int i = 0; i < n; ++i) toks.push_back(xp_token(i + 1, (mask >> i) & 1));
    facets.push_back(Simplex::of(toks));
  }
  Fixture fx;
  fx.id = "XP" + std::to_string(n);
  fx.complex = complex_from_simplices(facets);

  std::vector<NamedPermutation> gens;
  for (int i = 0; i < n; ++i)
    gens.push_back({"m" + std::to_string(i + 1),
                    Permutation::from_cycles({{xp_token(i + 1, true), xp_token(i + 1, false)}})});
  fx.action = GroupAction::from_generators(gens);

  std::map<VertexToken, RationalPoint> pos;
  for (int i = 0; i < n; ++i) {
    RationalPoint plus(n, Rational(0)), minus(n, Rational(0));
    plus[i] = 1;
    minus[i] = -1;
    pos[xp_token(i + 1, true)] = plus;
    pos[xp_token(i + 1, false)] = minus;
  }
  fx.positions = std::move(pos);
  fx.notes = "boundary of the " + std::to_string(n) +
             "-dimensional cross-polytope with the full sign-flip action";
  return fx;
}

// Frozen FNV-1a 64 checksums of serialize_complex() for each fixture.  These
// guard against accidental edits to the embedded facet tables.
struct ChecksumEntry {
  const char* id;
  std::uint64_t value;
};

const ChecksumEntry kChecksums[] = {
    {"K16", 0x9ed5cf86f0beae4bull},  {"K14", 0x3ae632d7cae4b60bull},
    {"K11", 0x91952da771e21837ull},  {"RP2_6", 0xdf6ebf6d8c359b00ull},
    {"XP1", 0xf8e34d9760b45301ull},  {"XP2", 0x99b74b7a6d4ba439ull},
    {"XP3", 0xbc78068e89af36b3ull},  {"XP4", 0x67cb8025371b8dfbull},
};

Fixture build_fixture(const std::string& id) {
  if (id == "K16") {
    Fixture fx;
    fx.id = id;
    fx.complex = complex_from_compact(kK16Facets);
    fx.action = k16_action();
    fx.notes = "16-vertex triangulation of real projective 3-space";
    return fx;
  }
  if (id == "K14") {
    Fixture fx;
    fx.id = id;
    fx.complex = complex_from_compact(kK14Facets);
    fx.action = k14_action();
    fx.notes = "14-vertex triangulation obtained from the 16-vertex one by two "
               "bipyramid retriangulations";
    return fx;
  }
  if (id == "K11") {
    Fixture fx;
    fx.id = id;
    fx.complex = complex_from_compact(kK11Facets);
    fx.action = k14_action();  // the same three involutions restrict to these vertices
    fx.notes = "11-vertex triangulation obtained from the 14-vertex one by three "
               "further bipyramid retriangulations";
    return fx;
  }
  if (id == "RP2_6") {
    Fixture fx;
    fx.id = id;
    fx.complex = complex_from_compact(kRP26Facets);
    fx.notes = "6-vertex real projective plane";
    return fx;
  }
  if (id.size() == 3 && id.starts_with("XP") && id[2] >= '1' && id[2] <= '4')
    return cross_polytope_fixture(id[2] - '0');
  throw Error(ErrorKind::Range, "unknown fixture '" + id + "'");
}

}  // namespace

std::vector<std::string> fixture_ids() {
  return {"K16", "K14", "K11", "RP2_6", "XP1", "XP2", "XP3", "XP4"};
}

Fixture load_fixture(const std::string& id) {
  Fixture fx = build_fixture(id);
  std::uint64_t got = fnv1a64(serialize_complex(fx.complex));
  for (const auto& entry : kChecksums) {
    if (entry.id == id) {
      if (entry.value != got)
        throw Error(ErrorKind::Parse, "fixture '" + id + "' failed its checksum");
      return fx;
    }
  }
  throw Error(ErrorKind::Range, "fixture '" + id + "' has no recorded checksum");
}

std::vector<std::string> fixture_flags(const Fixture& fx) {
  std::vector<std::string> flags;
  if (fx.id == "K14") {
    // published claims attached to this complex: fixed vertex set {1, 2, 3},
    // and a 23 lower bound for g2 of 14-vertex non-sphere closed 3-manifolds
    if (fx.action) {
      std::vector<VertexToken> fixed = fixed_vertices(fx.complex, *fx.action);
      std::vector<VertexToken> published = {"1", "2", "3"};
      if (fixed != published) {
        std::string got;
        for (const auto& v : fixed) got += (got.empty() ? "" : ", ") + v;
        flags.push_back("published fixed vertex set {1, 2, 3} disagrees with the computed {" +
                        got + "}");
      }
    }
    long long g2 = g_vector(fx.complex).g2;
    if (g2 < 23)
      flags.push_back("published floor 23 for g2 of 14-vertex non-sphere closed 3-manifolds is "
                      "contradicted by this complex's g2 = " +
                      std::to_string(g2));
  }
  return flags;
}

}  // namespace eqtri
