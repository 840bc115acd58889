#pragma once

// Command surface of the hinv tool. Every command prints one JSON report on
// standard output; the exit code follows the verdict.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hinv/concordance.hpp"
#include "hinv/io.hpp"
#include "hinv/satellite.hpp"
#include "hinv/stallings.hpp"

namespace hinv::cli {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum Exit { exit_pass = 0, exit_fail = 1, exit_undecided = 2, exit_input = 3, exit_unsupported = 4,
            exit_internal = 5 };

inline int exit_code(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return exit_pass;
  case Verdict::fail:
    return exit_fail;
  default:
    return exit_undecided;
  }
}

inline std::string fnv1a(const std::string &data, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

inline Json integer_json(const Integer &a) {
  if (abs(a) < Integer(1) << 53)
    return to_ll(a);
  return a.str();
}

inline Json invariants_json(const AbelianInvariants &a) {
  Json t = Json::array();
  for (const Integer &x : a.torsion)
    t.push_back(integer_json(x));
  return {{"free_rank", a.free_rank}, {"torsion", t}, {"group", a.to_string()}};
}

inline Json layers_json(const std::vector<AbelianInvariants> &ls) {
  Json out = Json::array();
  for (const auto &l : ls)
    out.push_back(invariants_json(l));
  return out;
}

inline Json quotient_json(const RelativeQuotient &Q) {
  Json ranks = Json::array();
  for (const auto &l : Q.layers())
    ranks.push_back(l.free_rank);
  return {{"level", Q.level()},
          {"G_order", Q.G().is_finite() ? Json(Q.G().order()) : Json(nullptr)},
          {"hirsch_length", Q.hirsch_length()},
          {"nilpotent_generators", Q.nilpotent_part().size()},
          {"layer_ranks", ranks},
          {"layers", layers_json(Q.layers())}};
}

inline Json strings_json(const std::vector<std::string> &v) {
  Json out = Json::array();
  for (const auto &s : v)
    out.push_back(s);
  return out;
}

inline Json iso_json(const IsoReport &r) {
  return {{"isomorphism", r.isomorphism()},       {"homomorphism", r.homomorphism},
          {"over_G", r.over_G},                   {"invariants_match", r.invariants_match},
          {"surjective", r.surjective},           {"differing_invariant", r.differing_invariant},
          {"detail", r.detail}};
}

inline Json extendability_json(const ExtendableMapCandidate &c) {
  const ExtendabilityReport &r = c.report;
  return {{"level", c.level},
          {"verdict", to_string(verdict(r.pass()))},
          {"mu_condition", to_string(r.mu_condition)},
          {"peripheral_condition", to_string(r.peripheral_condition)},
          {"over_G_condition", to_string(r.over_g_condition)},
          {"peripheral_commute", r.peripheral_commute},
          {"images", strings_json(c.image_strings())},
          {"detail", r.detail}};
}

inline Json automorphism_json(const AutomorphismReport &r) {
  return {{"member", r.member()},
          {"inverted", r.inverted},
          {"fixes_mu", to_string(r.fixes_mu)},
          {"preserves_peripheral", to_string(r.preserves_peripheral)},
          {"over_G", to_string(r.over_g)},
          {"bijective", to_string(r.bijective)},
          {"identity", r.identity},
          {"detail", r.detail}};
}

inline Json shadow_json(const ShadowReport &r, const RelativeQuotient &Q) {
  return {{"result", shadow_string(r.verdict)},
          {"conjugator", r.conjugator ? Json(Q.element_string(*r.conjugator)) : Json(nullptr)},
          {"exhaustive", r.exhaustive},
          {"examined", r.examined},
          {"detail", r.detail}};
}

struct Options {
  std::string command;
  std::vector<std::string> files;
  int level = 2;
  long long bound = 2;
  std::size_t limit = 200000;
  bool based = false;
  bool oracle = false;
  bool pretty = false;
  std::string map, map2, word, h2_trivial;
};

// The report under construction; verdict defaults to pass for purely
// computational commands.
struct Report {
  Json invariants = Json::object();
  std::vector<std::string> assumptions, taints;
  Verdict verdict = Verdict::pass;
  Json exhaustive = nullptr;

  void assume(const std::string &s) {
    for (const auto &a : assumptions)
      if (a == s)
        return;
    assumptions.push_back(s);
  }
  void taint(const std::vector<std::string> &ts) {
    for (const auto &t : ts)
      if (std::find(taints.begin(), taints.end(), t) == taints.end())
        taints.push_back(t);
  }
};

namespace detail {

inline void need_files(const Options &o, std::size_t n) {
  if (o.files.size() != n)
    throw InputError(o.command + " expects " + std::to_string(n) + " document argument" +
                     (n == 1 ? "" : "s") + ", got " + std::to_string(o.files.size()));
}

inline OverGStructure structure(const std::string &path) {
  io::InputDocument d = io::load_document(path);
  try {
    return io::over_g(d);
  } catch (const InputError &e) {
    throw InputError(std::filesystem::path(path).filename().string() + ": " + e.what());
  }
}

inline FpHom map_from(const std::string &path, const FpPresentation &source,
                      const FpPresentation &target) {
  io::InputDocument d = io::load_document(path);
  try {
    return io::read_map(d.map, source, target);
  } catch (const InputError &e) {
    throw InputError(std::filesystem::path(path).filename().string() + ": " + e.what());
  }
}

// The candidate given by a map document, or the identity on generators when
// K and J have the same group.
inline ExtendableMapCandidate candidate(const std::string &map, KnotPtr K,
                                        KnotPtr J, int n) {
  auto Q = J->quotient(n);
  if (map.empty()) {
    if (!(K->pi() == J->pi()))
      throw InputError("--map is required when K and J have different groups");
    return make_candidate(K, J, n, Q->generator_images());
  }
  FpHom f = map_from(map, K->pi(), J->pi());
  std::vector<RqElement> imgs;
  for (const FreeWord &w : f.images())
    imgs.push_back(Q->project(w));
  return make_candidate(K, J, n, std::move(imgs));
}

inline void add_quotients(Report &r, const KnotPtr &K, const KnotPtr &J, int n) {
  r.invariants["quotient_J"] = quotient_json(*J->quotient(n));
  if (!(K->pi() == J->pi()))
    r.invariants["quotient_K"] = quotient_json(*K->quotient(n));
}

inline void run_kernel(const Options &o, Report &r) {
  need_files(o, 1);
  OverGStructure g = structure(o.files[0]);
  if (g.G().is_finite()) {
    KernelPresentation k = kernel_presentation(g);
    r.invariants["index"] = k.table.size();
    r.invariants["kernel_generators"] = k.presentation.rank();
    r.invariants["kernel_relators"] = k.presentation.relators().size();
    r.invariants["h1_kernel"] = invariants_json(abelianization(k.presentation));
  } else {
    r.invariants["index"] = nullptr; // infinite G: membership only
  }
  if (!o.word.empty()) {
    FreeWord w = io::parse_word(o.word, g.pi().names());
    bool in = kernel_membership(w, g);
    r.invariants["word"] = o.word;
    r.invariants["gamma_of_word"] = g.G().label(g.gamma_of(w));
    r.invariants["in_kernel"] = in;
    r.verdict = verdict(in);
  }
}

inline void run_nq(const Options &o, Report &r) {
  need_files(o, 1);
  OverGStructure g = structure(o.files[0]);
  NilpotentQuotient q = nilpotent_quotient(g.pi(), o.level);
  Json ranks = Json::array();
  for (const auto &l : q.layers())
    ranks.push_back(l.free_rank);
  r.invariants["class"] = o.level;
  r.invariants["nilpotency_class"] = q.nilpotency_class();
  r.invariants["stabilized"] = q.stabilized();
  r.invariants["hirsch_length"] = q.pc().hirsch_length();
  r.invariants["weights"] = ranks;
  r.invariants["layers"] = layers_json(q.layers());
}

inline void run_relquo(const Options &o, Report &r) {
  need_files(o, 1);
  OverGStructure g = structure(o.files[0]);
  r.invariants["quotient"] = quotient_json(relative_quotient(g, o.level));
}

inline void run_h1(const Options &o, Report &r) {
  need_files(o, 1);
  OverGStructure g = structure(o.files[0]);
  AbelianInvariants h = h1_twisted(g);
  r.invariants["h1"] = invariants_json(h);
  if (o.oracle) {
    AbelianInvariants k = h1_kernel_via_rs(g);
    r.invariants["h1_kernel_via_rs"] = invariants_json(k);
    r.invariants["oracle_agreement"] = to_string(verdict(h == k));
    r.verdict = verdict(h == k);
  }
}

inline void run_h2(const Options &o, Report &r) {
  need_files(o, 1);
  OverGStructure g = structure(o.files[0]);
  NilpotentQuotient q = nilpotent_quotient(g.pi(), o.level);
  r.invariants["class"] = o.level;
  r.invariants["h2_of_nilpotent_quotient"] = invariants_json(h2_pc_group(q.pc()));
}

inline void run_stallings(const Options &o, Report &r) {
  need_files(o, 2);
  if (o.map.empty())
    throw InputError("stallings needs --map");
  OverGStructure A = structure(o.files[0]), B = structure(o.files[1]);
  FpHom f = map_from(o.map, A.pi(), B.pi());
  H2Hypothesis h2 =
      o.h2_trivial.empty() ? H2Hypothesis{} : H2Hypothesis::declared(o.h2_trivial);
  StallingsReport s = stallings_check(f, A, B, h2, o.level);
  Json levels = Json::array();
  for (const auto &[n, iso] : s.levels) {
    Json l = iso_json(iso);
    l["level"] = n;
    levels.push_back(l);
  }
  r.invariants["over_G"] = s.over_g.ok;
  r.invariants["h1_isomorphism"] = s.h1.isomorphism();
  r.invariants["h1_source"] = invariants_json(h1_twisted(A));
  r.invariants["h1_target"] = invariants_json(h1_twisted(B));
  r.invariants["h1_fingerprint_equal"] = s.fingerprint_equal;
  r.invariants["h2_epimorphism"] = to_string(s.h2);
  r.invariants["h2_route"] = s.h2_route;
  r.invariants["hypotheses"] = s.hypotheses();
  r.invariants["levels"] = levels;
  for (const auto &a : s.assumptions)
    r.assume(a);
  if (!s.over_g.ok || !s.h1.isomorphism() || s.h2 == Verdict::fail || !s.conclusions())
    r.verdict = Verdict::fail;
  else
    r.verdict = s.h2;
}

inline void run_extendable_check(const Options &o, Report &r) {
  need_files(o, 2);
  KnotPtr K = io::load_knot(o.files[0]), J = io::load_knot(o.files[1]);
  ExtendableMapCandidate c = candidate(o.map, K, J, o.level);
  r.invariants["candidate"] = extendability_json(c);
  add_quotients(r, K, J, o.level);
  r.taint(c.report.taints);
  r.verdict = verdict(c.pass());
}

inline void run_extendable_search(const Options &o, Report &r) {
  need_files(o, 2);
  KnotPtr K = io::load_knot(o.files[0]), J = io::load_knot(o.files[1]);
  SearchResult s = search_extendable(K, J, o.level, o.bound, o.limit);
  Json cs = Json::array();
  for (const auto &c : s.candidates)
    cs.push_back(extendability_json(c));
  r.invariants["bound"] = o.bound;
  r.invariants["examined"] = s.examined;
  r.invariants["found"] = s.candidates.size();
  r.invariants["candidates"] = cs;
  r.invariants["note"] = s.note;
  add_quotients(r, K, J, o.level);
  r.exhaustive = s.exhaustive;
  r.verdict = s.verdict;
}

inline void run_tower(const Options &o, Report &r) {
  need_files(o, 2);
  KnotPtr K = io::load_knot(o.files[0]), J = io::load_knot(o.files[1]);
  ExtendableMapCandidate c = candidate(o.map, K, J, o.level);
  r.taint(c.report.taints);
  Json levels = Json::array();
  bool all = c.pass();
  levels.push_back(extendability_json(c));
  Json isos = Json::array();
  if (c.pass())
    for (int j = 1; j < c.level; ++j) {
      QuotientIsoReport q = induced_quotient_iso(c, j);
      isos.push_back({{"j", j},
                      {"level", q.level},
                      {"isomorphism", q.iso.isomorphism()},
                      {"mu_condition", to_string(q.mu_condition)},
                      {"peripheral_condition", to_string(q.peripheral_condition)}});
      all &= q.pass();
      r.taint(q.taints);
    }
  while (c.level > 1) {
    c = tower_project(c);
    levels.push_back(extendability_json(c));
    all &= c.pass();
  }
  r.invariants["projections"] = levels;
  r.invariants["quotient_isomorphisms"] = isos;
  r.verdict = verdict(all);
}

inline void run_rebase(const Options &o, Report &r) {
  need_files(o, 2);
  if (o.word.empty())
    throw InputError("rebase needs --word");
  KnotPtr K = io::load_knot(o.files[0]), J = io::load_knot(o.files[1]);
  ExtendableMapCandidate c = candidate(o.map, K, J, o.level);
  RebaseResult rb = rebase(*K, io::parse_word(o.word, K->pi().names()), c);
  r.invariants["original"] = extendability_json(c);
  r.invariants["rebased"] = extendability_json(rb.candidate);
  r.invariants["conjugator"] = c.quotient->element_string(rb.conjugator);
  r.invariants["obstruction"] = rb.obstruction;
  r.invariants["detail"] = rb.detail;
  bool ok = !rb.obstruction && rb.candidate.pass();
  if (ok && c.pass()) {
    AutomorphismReport a = bc_automorphism_from_pair(c, rb.candidate);
    r.invariants["automorphism"] = automorphism_json(a);
    ok = a.member();
  }
  r.verdict = verdict(ok);
}

inline void run_an_auto(const Options &o, Report &r) {
  need_files(o, 2);
  KnotPtr K = io::load_knot(o.files[0]), J = io::load_knot(o.files[1]);
  ExtendableMapCandidate c1 = candidate(o.map, K, J, o.level);
  ExtendableMapCandidate c2 = candidate(o.map2, K, J, o.level);
  r.invariants["first"] = extendability_json(c1);
  r.invariants["second"] = extendability_json(c2);
  if (!c1.pass() || !c2.pass()) {
    r.verdict = Verdict::fail;
    return;
  }
  AutomorphismReport a = bc_automorphism_from_pair(c1, c2);
  r.invariants["automorphism"] = automorphism_json(a);
  r.verdict = verdict(a.member());
}

inline void run_shadow_compare(const Options &o, Report &r) {
  need_files(o, 2);
  KnotPtr K = io::load_knot(o.files[0]), J = io::load_knot(o.files[1]);
  ExtendableMapCandidate c1 = candidate(o.map, K, J, o.level);
  ExtendableMapCandidate c2 =
      o.map2.empty() ? canonical_tau(J, o.level) : candidate(o.map2, K, J, o.level);
  ShadowReport s = pi1_shadow_compare(c1, c2, o.bound, o.limit);
  r.invariants["first"] = extendability_json(c1);
  r.invariants["second"] = extendability_json(c2);
  r.invariants["shadow"] = shadow_json(s, *c1.quotient);
  r.exhaustive = s.exhaustive;
  r.verdict = s.verdict;
}

inline ConcordanceCertificate certificate(const Options &o) {
  need_files(o, 1);
  return io::load_certificate(o.files[0]);
}

inline void run_concordance_check(const Options &o, Report &r) {
  ConcordanceCertificate c = certificate(o);
  ConcordanceReport rep = check_n_concordance(c, o.level, o.based);
  r.invariants["level"] = o.level;
  r.invariants["based"] = o.based;
  r.invariants["boundary"] = to_string(rep.boundary);
  if (o.based)
    r.invariants["meridian"] = to_string(rep.meridian);
  r.invariants["detail"] = rep.detail;
  bool ok = rep.pass();
  if (o.level >= 2) {
    ConcordanceIsoReport iso = quotient_iso_from_concordance(c, o.level - 1);
    r.invariants["inclusion_K"] = iso_json(iso.K);
    r.invariants["inclusion_J"] = iso_json(iso.J);
    ok &= iso.pass();
  }
  for (const auto &a : rep.assumptions)
    r.assume(a);
  r.verdict = verdict(ok);
}

inline void run_concordance_extract(const Options &o, Report &r) {
  ConcordanceCertificate c = certificate(o);
  ExtractionResult e = extendable_from_concordance(c, o.level);
  r.invariants["candidate"] = extendability_json(e.candidate);
  r.invariants["restriction_ok"] = e.restriction_ok;
  ShadowReport s = pi1_shadow_compare(e.candidate, canonical_tau(c.J, o.level), o.bound, o.limit);
  r.invariants["shadow_vs_canonical"] = shadow_json(s, *e.candidate.quotient);
  r.assume("boundary generator lists generate the peripheral images");
  r.taint(e.candidate.report.taints);
  r.verdict = verdict(e.candidate.pass() && e.restriction_ok);
}

inline std::vector<int> levels_upto(int n) {
  std::vector<int> v;
  for (int k = 1; k <= n; ++k)
    v.push_back(k);
  return v;
}

inline void run_satellite(const Options &o, Report &r) {
  need_files(o, 1);
  SatelliteInput s = io::load_satellite(o.files[0]);
  Amalgam a = amalgam_presentation(s);
  CollapseReport c = satellite_collapse_hom(s, a, levels_upto(o.level));
  Json surv = Json::array();
  for (int i : c.surviving_relators)
    surv.push_back(i);
  Json imgs = Json::array();
  for (const FreeWord &w : c.h.images())
    imgs.push_back(io::format_word(w, s.J->pi().names()));
  r.invariants["amalgam_generators"] = a.knot->pi().rank();
  r.invariants["amalgam_relators"] = a.knot->pi().relators().size();
  r.invariants["gluing_relators"] = {a.gluing_first, a.gluing_first + 1};
  r.invariants["collapse_images"] = imgs;
  r.invariants["surviving_relators"] = surv;
  r.invariants["gluing_ok"] = c.gluing_ok;
  r.invariants["mu_ok"] = c.mu_ok;
  r.invariants["over_G"] = c.over_g;
  r.verdict = verdict(c.pass());
}

inline void run_characteristic(const Options &o, Report &r) {
  KnotPtr K, J;
  std::optional<FpHom> alpha;
  if (o.files.size() == 1) {
    SatelliteInput s = io::load_satellite(o.files[0]);
    Amalgam a = amalgam_presentation(s);
    CollapseReport c = satellite_collapse_hom(s, a, levels_upto(o.level));
    r.invariants["collapse_ok"] = c.pass();
    K = a.knot;
    J = s.J;
    alpha = c.h;
  } else {
    need_files(o, 2);
    if (o.map.empty())
      throw InputError("characteristic needs --map for two knot documents");
    K = io::load_knot(o.files[0]);
    J = io::load_knot(o.files[1]);
    alpha = map_from(o.map, K->pi(), J->pi());
  }
  CharacteristicReport c = characteristic_to_extendable(*alpha, K, J, o.level);
  r.invariants["candidate"] = extendability_json(c.candidate);
  r.invariants["shadow_vs_canonical"] = shadow_json(c.shadow, *c.candidate.quotient);
  for (const auto &a : c.assumptions)
    r.assume(a);
  r.taint(c.candidate.report.taints);
  r.exhaustive = c.shadow.exhaustive;
  if (!c.candidate.pass())
    r.verdict = Verdict::fail;
  else
    r.verdict = c.shadow.verdict;
}

} // namespace detail

inline const std::vector<std::string> &commands() {
  static const std::vector<std::string> c{
      "kernel",  "nq",          "relquo",          "h1",
      "h2",      "stallings",   "extendable-check", "extendable-search",
      "tower",   "rebase",      "an-auto",         "shadow-compare",
      "concordance-check",      "concordance-extract",
      "satellite", "characteristic"};
  return c;
}

inline std::string digest(const Options &o) {
  std::string data = o.command;
  for (const std::string &f : o.files)
    data += '\0' + io::read_file(f);
  for (const std::string *m : {&o.map, &o.map2})
    if (!m->empty())
      data += '\0' + io::read_file(*m);
  data += '\0' + std::to_string(o.level) + ' ' + std::to_string(o.bound) + ' ' +
          std::to_string(o.limit) + ' ' + (o.based ? "b" : "") + (o.oracle ? "o" : "") + ' ' +
          o.word + ' ' + o.h2_trivial;
  return "fnv1a64:" + fnv1a(data);
}

inline Json options_json(const Options &o) {
  Json j{{"class", o.level}, {"bound", o.bound}};
  if (o.based)
    j["based"] = true;
  if (o.oracle)
    j["oracle"] = true;
  if (!o.map.empty())
    j["map"] = o.map;
  if (!o.map2.empty())
    j["map2"] = o.map2;
  if (!o.word.empty())
    j["word"] = o.word;
  if (!o.h2_trivial.empty())
    j["h2_trivial"] = o.h2_trivial;
  return j;
}

inline int run_options(const Options &o, std::ostream &out, std::ostream &err) {
  const auto start = std::chrono::steady_clock::now();
  Json j;
  j["schema_version"] = schema_version;
  j["command"] = o.command;
  j["inputs"] = {{"files", strings_json(o.files)}, {"options", options_json(o)}};
  j["conventions"] = {{"words", "lowercase letter = generator, uppercase = inverse"},
                      {"commutator", "[u,v] = u^-1 v^-1 u v"},
                      {"conjugation", "u^v = v^-1 u v"}};
  auto finish = [&](int code) {
    j["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                             start)
                                   .count()}};
    out << j.dump(o.pretty ? 2 : -1) << "\n";
    return code;
  };
  auto error = [&](const char *kind, const std::string &msg, int code) {
    j["error"] = {{"kind", kind}, {"message", msg}};
    err << "hinv " << o.command << ": " << msg << "\n";
    return finish(code);
  };
  try {
    j["inputs"]["digest"] = digest(o);
    if (o.level < 1)
      throw InputError("--class must be at least 1");
    Report r;
    using Fn = void (*)(const Options &, Report &);
    static const std::vector<std::pair<std::string, Fn>> table{
        {"kernel", detail::run_kernel},
        {"nq", detail::run_nq},
        {"relquo", detail::run_relquo},
        {"h1", detail::run_h1},
        {"h2", detail::run_h2},
        {"stallings", detail::run_stallings},
        {"extendable-check", detail::run_extendable_check},
        {"extendable-search", detail::run_extendable_search},
        {"tower", detail::run_tower},
        {"rebase", detail::run_rebase},
        {"an-auto", detail::run_an_auto},
        {"shadow-compare", detail::run_shadow_compare},
        {"concordance-check", detail::run_concordance_check},
        {"concordance-extract", detail::run_concordance_extract},
        {"satellite", detail::run_satellite},
        {"characteristic", detail::run_characteristic}};
    Fn fn = nullptr;
    for (const auto &[name, f] : table)
      if (name == o.command)
        fn = f;
    if (!fn)
      throw InputError("unknown command '" + o.command + "'");
    fn(o, r);
    j["verdict"] = to_string(r.verdict);
    j["invariants"] = r.invariants;
    j["assumptions"] = strings_json(r.assumptions);
    j["taints"] = strings_json(r.taints);
    j["exhaustive"] = r.exhaustive;
    return finish(exit_code(r.verdict));
  } catch (const InputError &e) {
    return error("input", e.what(), exit_input);
  } catch (const StructuralError &e) {
    return error("structural", e.what(), exit_input);
  } catch (const UnsupportedError &e) {
    return error("unsupported", e.what(), exit_unsupported);
  } catch (const std::exception &e) {
    return error("internal", e.what(), exit_internal);
  }
}

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"hinv: nilpotent invariants of knots over a group G"};
  app.require_subcommand(1);
  Options o;
  for (const std::string &name : commands()) {
    CLI::App *sub = app.add_subcommand(name);
    sub->add_option("documents", o.files, "input documents")->required();
    sub->add_option("--class", o.level, "level n (class of the nilpotent part plus one)");
    sub->add_option("--bound", o.bound, "coordinate bound for searches");
    sub->add_option("--limit", o.limit, "cap on the number of elements searched");
    sub->add_flag("--based", o.based, "also compare meridians");
    sub->add_flag("--oracle", o.oracle, "compare against the Reidemeister-Schreier pipeline");
    sub->add_flag("--pretty", o.pretty, "indent the JSON report");
    sub->add_option("--map", o.map, "map document");
    sub->add_option("--map2", o.map2, "second map document");
    sub->add_option("--word", o.word, "word in the first document's generators");
    sub->add_option("--h2-trivial", o.h2_trivial, "declare H_2 of the target trivial, with provenance");
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError &e) {
    err << "hinv: " << e.what() << "\n";
    return exit_input;
  }
  for (CLI::App *sub : app.get_subcommands())
    o.command = sub->get_name();
  return run_options(o, out, err);
}

} // namespace hinv::cli
