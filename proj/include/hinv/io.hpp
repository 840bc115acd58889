#pragma once

// Sectioned text documents:
//
//   [group]
//   name = trefoil
//   generators = a b
//   relators = abaBAB
//   [gamma]
//   G = cyclic:3
//   a = 1
//   b = 1
//   [peripheral]
//   mu = a
//   lambda = abaabaA^6
//
// Generators are single lowercase letters; an uppercase letter is the
// inverse, x^k and X^k are powers, 1 is the empty word. Commutators follow
// [u,v] = u^-1 v^-1 u v, so abAB is a b a^-1 b^-1 = [a^-1, b^-1].

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hinv/concordance.hpp"
#include "hinv/satellite.hpp"

namespace hinv::io {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep = ' ') {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty())
      out.push_back(t);
    cur.clear();
  };
  for (char c : s) {
    if (sep == ' ' ? std::isspace(static_cast<unsigned char>(c)) != 0 : c == sep)
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

inline Integer parse_integer(const std::string &s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size())
    throw InputError("expected an integer, got '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw InputError("expected an integer, got '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

inline std::vector<Integer> parse_integers(std::string_view s) {
  std::vector<Integer> out;
  for (const std::string &t : split(s))
    out.push_back(parse_integer(t));
  return out;
}

inline FreeWord parse_word(std::string_view text, const std::vector<std::string> &names) {
  std::string s = trim(text);
  FreeWord w;
  if (s == "1" || s.empty())
    return w;
  auto index_of = [&](char c) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i].size() == 1 && names[i][0] == lower)
        return static_cast<int>(i);
    throw InputError(std::string("undeclared generator '") + lower + "'");
  };
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw InputError("malformed word '" + s + "' at column " + std::to_string(i + 1));
    const int g = index_of(c);
    long long e = std::isupper(static_cast<unsigned char>(c)) ? -1 : 1;
    ++i;
    if (i < s.size() && s[i] == '^') {
      std::size_t j = ++i;
      if (j < s.size() && s[j] == '-')
        ++j;
      std::size_t k = j;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
        ++k;
      if (k == j)
        throw InputError("malformed power in '" + s + "' at column " + std::to_string(i + 1));
      e *= std::stoll(s.substr(i, k - i));
      i = k;
    }
    w.push(g, e);
  }
  return w;
}

inline std::vector<FreeWord> parse_words(std::string_view text,
                                         const std::vector<std::string> &names) {
  std::vector<FreeWord> out;
  for (const std::string &t : split(text))
    out.push_back(parse_word(t, names));
  return out;
}

inline std::string format_word(const FreeWord &w, const std::vector<std::string> &names) {
  if (w.empty())
    return "1";
  std::string out;
  for (const Letter &l : w.letters()) {
    char c = names.at(l.gen)[0];
    if (l.exp < 0)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out += c;
    if (l.exp != 1 && l.exp != -1)
      out += "^" + std::to_string(l.exp < 0 ? -l.exp : l.exp);
  }
  return out;
}

inline std::string format_integers(const std::vector<Integer> &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? " " : "") + v[i].str();
  return out;
}

struct Entry {
  std::string key, value;
  int line = 0;
  friend bool operator==(const Entry &a, const Entry &b) {
    return a.key == b.key && a.value == b.value;
  }
};

struct Section {
  std::string name;
  int line = 0;
  std::vector<Entry> entries;
};

inline InputError positioned(const std::string &section, int line, const std::string &msg) {
  return InputError("section [" + section + "], line " + std::to_string(line) + ": " + msg);
}

// Lines are "key = value"; '#' starts a comment.
inline std::vector<Section> parse_sections(std::string_view text) {
  std::vector<Section> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty())
      continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw InputError("line " + std::to_string(line) + ": malformed section header");
      out.push_back({trim(s.substr(1, s.size() - 2)), line, {}});
      continue;
    }
    if (out.empty())
      throw InputError("line " + std::to_string(line) + ": entry outside of any section");
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw positioned(out.back().name, line, "expected 'key = value'");
    out.back().entries.push_back({trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line});
  }
  return out;
}

struct PcSpec {
  std::vector<Integer> orders;
  std::vector<std::tuple<int, int, std::vector<Integer>>> conj; // g_j^g_i, 1-based j > i
  std::vector<std::pair<int, std::vector<Integer>>> powers;     // g_i^m_i, 1-based
  friend bool operator==(const PcSpec &, const PcSpec &) = default;
};

// One of trivial, cyclic:N, table:rows, perm:generators, pc:orders; one
// image per generator of the group.
struct GammaSpec {
  std::string kind = "trivial";
  int order = 1;
  std::vector<std::vector<int>> rows; // table rows or permutation generators
  PcSpec pc;
  std::vector<std::vector<Integer>> images;
  friend bool operator==(const GammaSpec &, const GammaSpec &) = default;
};

struct PeripheralSpec {
  FreeWord mu, lambda;
  Integer a = 1, b = 0;
  std::optional<FreeWord> basing;
  friend bool operator==(const PeripheralSpec &, const PeripheralSpec &) = default;
};

struct InputDocument {
  std::string name;
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;
  std::optional<GammaSpec> gamma;
  std::optional<PeripheralSpec> peripheral;
  // Raw entries; their words refer to other documents and are read on load.
  std::vector<Entry> certificate, satellite, map;

  FpPresentation presentation() const { return FpPresentation(generators, relators); }
  const Entry *find(const std::vector<Entry> &sec, const std::string &key) const {
    for (const Entry &e : sec)
      if (e.key == key)
        return &e;
    return nullptr;
  }
  friend bool operator==(const InputDocument &, const InputDocument &) = default;
};

namespace detail {

inline std::vector<std::vector<int>> parse_rows(const std::string &s) {
  std::vector<std::vector<int>> rows;
  for (const std::string &r : split(s, ';')) {
    std::vector<int> row;
    for (const Integer &v : parse_integers(r))
      row.push_back(static_cast<int>(to_ll(v)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string format_rows(const std::vector<std::vector<int>> &rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += i ? " ; " : "";
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      out += (j ? " " : "") + std::to_string(rows[i][j]);
  }
  return out;
}

inline void parse_gamma_kind(GammaSpec &g, const std::string &v) {
  const auto colon = v.find(':');
  g.kind = trim(v.substr(0, colon));
  const std::string rest = colon == std::string::npos ? "" : trim(v.substr(colon + 1));
  if (g.kind == "trivial")
    return;
  if (g.kind == "cyclic") {
    g.order = static_cast<int>(to_ll(parse_integer(rest)));
    if (g.order < 1)
      throw InputError("cyclic order must be positive");
  } else if (g.kind == "table" || g.kind == "perm") {
    g.rows = parse_rows(rest);
  } else if (g.kind == "pc") {
    g.pc.orders = parse_integers(rest);
  } else {
    throw InputError("unknown G kind '" + g.kind + "' (expected trivial, cyclic, table, perm, pc)");
  }
}

} // namespace detail

inline InputDocument parse_document(std::string_view text) {
  InputDocument doc;
  bool have_group = false;
  std::vector<std::pair<const Entry *, std::string>> gamma_images; // checked after [group]
  std::vector<Section> sections = parse_sections(text);
  for (const Section &sec : sections)
    if (sec.name == "group") {
      have_group = true;
      for (const Entry &e : sec.entries) {
        try {
          if (e.key == "name")
            doc.name = e.value;
          else if (e.key == "generators") {
            for (const std::string &g : split(e.value)) {
              if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
                throw InputError("generator names are single lowercase letters, got '" + g + "'");
              for (const std::string &h : doc.generators)
                if (h == g)
                  throw InputError("generator '" + g + "' declared twice");
              doc.generators.push_back(g);
            }
          } else if (e.key == "relators") {
            for (FreeWord &w : parse_words(e.value, doc.generators))
              doc.relators.push_back(std::move(w));
          } else
            throw InputError("unknown key '" + e.key + "'");
        } catch (const InputError &err) {
          throw positioned(sec.name, e.line, err.what());
        }
      }
    }
  if (!have_group)
    throw InputError("document has no [group] section");
  const auto &names = doc.generators;
  for (const Section &sec : sections) {
    if (sec.name == "group")
      continue;
    if (sec.name == "gamma") {
      GammaSpec g;
      g.images.assign(names.size(), {});
      std::vector<bool> seen(names.size(), false);
      for (const Entry &e : sec.entries) {
        try {
          if (e.key == "G") {
            detail::parse_gamma_kind(g, e.value);
          } else if (e.key.rfind("conj ", 0) == 0) {
            auto ij = parse_integers(e.key.substr(5));
            if (ij.size() != 2)
              throw InputError("expected 'conj j i'");
            g.pc.conj.emplace_back(static_cast<int>(to_ll(ij[0])), static_cast<int>(to_ll(ij[1])),
                                   parse_integers(e.value));
          } else if (e.key.rfind("power ", 0) == 0) {
            g.pc.powers.emplace_back(static_cast<int>(to_ll(parse_integer(trim(e.key.substr(6))))),
                                     parse_integers(e.value));
          } else {
            int idx = -1;
            for (std::size_t i = 0; i < names.size(); ++i)
              if (names[i] == e.key)
                idx = static_cast<int>(i);
            if (idx < 0)
              throw InputError("undeclared generator '" + e.key + "'");
            if (seen[idx])
              throw InputError("second image for '" + e.key + "'");
            seen[idx] = true;
            g.images[idx] = parse_integers(e.value);
          }
        } catch (const InputError &err) {
          throw positioned(sec.name, e.line, err.what());
        }
      }
      for (std::size_t i = 0; i < names.size(); ++i)
        if (!seen[i] && g.kind != "trivial")
          throw positioned(sec.name, sec.line, "no image for generator '" + names[i] + "'");
      doc.gamma = std::move(g);
    } else if (sec.name == "peripheral") {
      PeripheralSpec p;
      bool mu = false;
      for (const Entry &e : sec.entries) {
        try {
          if (e.key == "mu") {
            p.mu = parse_word(e.value, names);
            mu = true;
          } else if (e.key == "lambda")
            p.lambda = parse_word(e.value, names);
          else if (e.key == "class") {
            auto c = parse_integers(e.value);
            if (c.size() != 2)
              throw InputError("class needs two coordinates");
            p.a = c[0];
            p.b = c[1];
          } else if (e.key == "basing")
            p.basing = parse_word(e.value, names);
          else
            throw InputError("unknown key '" + e.key + "'");
        } catch (const InputError &err) {
          throw positioned(sec.name, e.line, err.what());
        }
      }
      if (!mu)
        throw positioned(sec.name, sec.line, "missing mu");
      doc.peripheral = std::move(p);
    } else if (sec.name == "certificate") {
      doc.certificate = sec.entries;
    } else if (sec.name == "satellite") {
      doc.satellite = sec.entries;
    } else if (sec.name == "map") {
      doc.map = sec.entries;
    } else {
      throw positioned(sec.name, sec.line, "unknown section");
    }
  }
  return doc;
}

inline std::string serialize(const InputDocument &d) {
  std::ostringstream o;
  o << "[group]\n";
  if (!d.name.empty())
    o << "name = " << d.name << "\n";
  o << "generators =";
  for (const std::string &g : d.generators)
    o << " " << g;
  o << "\n";
  if (!d.relators.empty()) {
    o << "relators =";
    for (const FreeWord &r : d.relators)
      o << " " << format_word(r, d.generators);
    o << "\n";
  }
  if (d.gamma) {
    const GammaSpec &g = *d.gamma;
    o << "[gamma]\nG = " << g.kind;
    if (g.kind == "cyclic")
      o << ":" << g.order;
    else if (g.kind == "table" || g.kind == "perm")
      o << ": " << detail::format_rows(g.rows);
    else if (g.kind == "pc")
      o << ": " << format_integers(g.pc.orders);
    o << "\n";
    for (const auto &[j, i, v] : g.pc.conj)
      o << "conj " << j << " " << i << " = " << format_integers(v) << "\n";
    for (const auto &[i, v] : g.pc.powers)
      o << "power " << i << " = " << format_integers(v) << "\n";
    for (std::size_t i = 0; i < d.generators.size(); ++i)
      if (!g.images[i].empty())
        o << d.generators[i] << " = " << format_integers(g.images[i]) << "\n";
  }
  if (d.peripheral) {
    const PeripheralSpec &p = *d.peripheral;
    o << "[peripheral]\nmu = " << format_word(p.mu, d.generators) << "\n";
    o << "lambda = " << format_word(p.lambda, d.generators) << "\n";
    if (p.a != 1 || p.b != 0)
      o << "class = " << p.a << " " << p.b << "\n";
    if (p.basing)
      o << "basing = " << format_word(*p.basing, d.generators) << "\n";
  }
  for (auto [name, sec] : {std::pair{"certificate", &d.certificate},
                           std::pair{"satellite", &d.satellite}, std::pair{"map", &d.map}}) {
    if (sec->empty())
      continue;
    o << "[" << name << "]\n";
    for (const Entry &e : *sec)
      o << e.key << " = " << e.value << "\n";
  }
  return o.str();
}

inline std::shared_ptr<const AmbientGroup> build_G(const GammaSpec &g) {
  if (g.kind == "trivial")
    return std::make_shared<const AmbientGroup>(AmbientGroup::trivial());
  if (g.kind == "cyclic")
    return std::make_shared<const AmbientGroup>(AmbientGroup::cyclic(g.order));
  if (g.kind == "table")
    return std::make_shared<const AmbientGroup>(AmbientGroup::from_table(FiniteGroup(g.rows)));
  if (g.kind == "perm")
    return std::make_shared<const AmbientGroup>(AmbientGroup::from_permutations(g.rows));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.pc.orders.size(); ++i)
    names.push_back("g" + std::to_string(i + 1));
  PcPresentation p(names, g.pc.orders);
  const std::size_t n = names.size();
  auto vec = [&](const std::vector<Integer> &v) {
    if (v.size() != n)
      throw InputError("pc relation needs " + std::to_string(n) + " exponents");
    return PcElement(v.begin(), v.end());
  };
  auto idx = [&](int i) {
    if (i < 1 || i > static_cast<int>(n))
      throw InputError("pc generator index " + std::to_string(i) + " out of range");
    return static_cast<std::size_t>(i - 1);
  };
  for (const auto &[j, i, v] : g.pc.conj)
    p.set_conjugate(idx(j), idx(i), vec(v));
  for (const auto &[i, v] : g.pc.powers)
    p.set_power(idx(i), vec(v));
  p.finalize();
  return std::make_shared<const AmbientGroup>(AmbientGroup::polycyclic(std::move(p)));
}

inline AmbientGroup::Element gamma_image(const AmbientGroup &G, const GammaSpec &g,
                                         const std::vector<Integer> &v) {
  if (g.kind == "trivial")
    return G.identity();
  if (g.kind == "pc") {
    if (v.size() != g.pc.orders.size())
      throw InputError("image needs one exponent per pc generator");
    const PcPresentation &pc = G.pc();
    PcElement e = pc.identity();
    for (std::size_t i = 0; i < v.size(); ++i)
      e = pc.multiply(e, pc.unit(i, v[i]));
    return e;
  }
  if (g.kind == "perm") {
    std::vector<int> p;
    for (const Integer &x : v)
      p.push_back(static_cast<int>(to_ll(x)));
    auto i = G.permutation_index(p);
    if (!i)
      throw InputError("permutation is not in G");
    return G.from_index(*i);
  }
  if (v.size() != 1)
    throw InputError("image in a finite G is one element index");
  long long x = to_ll(v[0]);
  if (g.kind == "cyclic")
    x = ((x % g.order) + g.order) % g.order;
  if (x < 0 || x >= G.order())
    throw InputError("element index " + std::to_string(x) + " out of range");
  return G.from_index(static_cast<int>(x));
}

inline OverGStructure over_g(const InputDocument &d) {
  GammaSpec g = d.gamma.value_or(GammaSpec{});
  if (g.images.empty())
    g.images.assign(d.generators.size(), {});
  try {
    auto G = build_G(g);
    std::vector<AmbientGroup::Element> imgs;
    for (const auto &v : g.images)
      imgs.push_back(gamma_image(*G, g, v));
    return OverGStructure(d.presentation(), G, imgs);
  } catch (const InputError &e) {
    throw InputError(std::string("section [gamma]: ") + e.what());
  }
}

inline KnotPtr knot(const InputDocument &d, const std::string &fallback_name = "knot") {
  if (!d.peripheral)
    throw InputError("document has no [peripheral] section");
  const PeripheralSpec &p = *d.peripheral;
  try {
    return std::make_shared<const KnotData>(d.name.empty() ? fallback_name : d.name, over_g(d),
                                            BoundaryCondition(p.mu, p.lambda, p.a, p.b), p.basing);
  } catch (const InputError &e) {
    std::string m = e.what();
    if (m.rfind("section", 0) == 0)
      throw;
    throw InputError("section [peripheral]: " + m);
  }
}

inline std::string read_file(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline InputDocument load_document(const std::filesystem::path &p) {
  try {
    return parse_document(read_file(p));
  } catch (const InputError &e) {
    throw InputError(p.filename().string() + ": " + e.what());
  }
}

// Looks up a required key of a raw section, with its position on failure.
inline const Entry &require(const std::vector<Entry> &sec, const std::string &section,
                            const std::string &key) {
  for (const Entry &e : sec)
    if (e.key == key)
      return e;
  throw InputError("section [" + section + "]: missing '" + key + "'");
}

template <class F>
auto at_entry(const Entry &e, const std::string &section, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError &err) {
    throw positioned(section, e.line, err.what());
  }
}

// A [map] section: one "x = word" line per source generator, words in the
// target's generators.
inline FpHom read_map(const std::vector<Entry> &sec, const FpPresentation &source,
                      const FpPresentation &target) {
  std::vector<std::optional<FreeWord>> imgs(source.rank());
  for (const Entry &e : sec)
    at_entry(e, "map", [&] {
      int idx = -1;
      for (int i = 0; i < source.rank(); ++i)
        if (source.names()[i] == e.key)
          idx = i;
      if (idx < 0)
        throw InputError("'" + e.key + "' is not a generator of the source");
      if (imgs[idx])
        throw InputError("second image for '" + e.key + "'");
      imgs[idx] = parse_word(e.value, target.names());
      return 0;
    });
  std::vector<FreeWord> out;
  for (int i = 0; i < source.rank(); ++i) {
    if (!imgs[i])
      throw InputError("section [map]: no image for '" + source.names()[i] + "'");
    out.push_back(*imgs[i]);
  }
  return FpHom(source, std::make_shared<const FpPresentation>(target), std::move(out));
}

inline KnotPtr load_knot(const std::filesystem::path &p) {
  InputDocument d = load_document(p);
  try {
    return knot(d, p.stem().string());
  } catch (const InputError &e) {
    throw InputError(p.filename().string() + ": " + e.what());
  }
}

// [group]/[gamma] describe pi_V; [certificate] names the two knot files
// (relative to this one) and gives the inclusions as word lists.
inline ConcordanceCertificate load_certificate(const std::filesystem::path &p) {
  InputDocument d = load_document(p);
  const auto dir = p.parent_path();
  try {
    const auto &sec = d.certificate;
    const std::string S = "certificate";
    KnotPtr K = load_knot(dir / require(sec, S, "K").value);
    KnotPtr J = load_knot(dir / require(sec, S, "J").value);
    OverGStructure V = over_g(d);
    const auto &names = d.generators;
    auto words = [&](const std::string &key) {
      const Entry &e = require(sec, S, key);
      return at_entry(e, S, [&] { return parse_words(e.value, names); });
    };
    auto word = [&](const std::string &key) {
      const Entry &e = require(sec, S, key);
      return at_entry(e, S, [&] { return parse_word(e.value, names); });
    };
    auto incl = [&](const std::string &key, const KnotPtr &L) {
      std::vector<FreeWord> w = words(key);
      if (static_cast<int>(w.size()) != L->pi().rank())
        throw positioned(S, require(sec, S, key).line,
                         key + " needs " + std::to_string(L->pi().rank()) + " words");
      return FpHom(L->pi(), std::make_shared<const FpPresentation>(V.pi()), std::move(w));
    };
    FpHom iK = incl("incl_K", K), iJ = incl("incl_J", J);
    return ConcordanceCertificate(K, J, std::move(V), std::move(iK), std::move(iJ), word("mu_K"),
                                  word("mu_J"), words("boundary_J"), words("boundary_V"));
  } catch (const InputError &e) {
    std::string m = e.what();
    if (m.find(".knot:") != std::string::npos)
      throw;
    throw InputError(p.filename().string() + ": " + m);
  }
}

// [group] is the exterior of eta in E_J, [peripheral] gives mu_J and lambda_J
// in it, [satellite] names the companion J and gives eta and L.
inline SatelliteInput load_satellite(const std::filesystem::path &p) {
  InputDocument d = load_document(p);
  try {
    const auto &sec = d.satellite;
    const std::string S = "satellite";
    SatelliteInput s;
    s.J = load_knot(p.parent_path() / require(sec, S, "companion").value);
    s.exterior = d.presentation();
    if (!d.peripheral)
      throw InputError("document has no [peripheral] section");
    s.mu_J = d.peripheral->mu;
    s.lambda_J = d.peripheral->lambda;
    auto word = [&](const std::string &key, const std::vector<std::string> &names) {
      const Entry &e = require(sec, S, key);
      return at_entry(e, S, [&] { return parse_word(e.value, names); });
    };
    const Entry &rf = require(sec, S, "refill");
    s.refill = at_entry(rf, S, [&] { return parse_words(rf.value, s.J->pi().names()); });
    if (static_cast<int>(s.refill.size()) != s.exterior.rank())
      throw positioned(S, rf.line, "refill needs one word per exterior generator");
    s.mu_eta = word("mu_eta", d.generators);
    s.lambda_eta = word("lambda_eta", d.generators);
    const Entry &lg = require(sec, S, "L_generators");
    std::vector<std::string> ln = split(lg.value);
    for (const std::string &g : ln)
      if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
        throw positioned(S, lg.line, "generator names are single lowercase letters");
    std::vector<FreeWord> lr;
    if (const Entry *e = d.find(sec, "L_relators"))
      lr = at_entry(*e, S, [&] { return parse_words(e->value, ln); });
    s.L = FpPresentation(ln, lr);
    s.mu_L = word("mu_L", ln);
    s.lambda_L = word("lambda_L", ln);
    return s;
  } catch (const InputError &e) {
    std::string m = e.what();
    if (m.find(".knot:") != std::string::npos)
      throw;
    throw InputError(p.filename().string() + ": " + m);
  }
}

} // namespace hinv::io
