#include "twogroups/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <random>
#include <set>
#include <thread>

#include "twogroups/structure.hpp"

namespace twogroups {

using json = nlohmann::ordered_json;

namespace {

// Runs fn(0..count-1) on `jobs` threads; fn must only write to its own slot.
void parallel_for(std::size_t count, unsigned jobs, std::function<void(std::size_t)> const& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
}

std::vector<FamilyGroup> groups_of(std::vector<Family> families, std::uint64_t max_order) {
  std::sort(families.begin(), families.end());
  families.erase(std::unique(families.begin(), families.end()), families.end());
  std::vector<FamilyGroup> out;
  for (auto f : families)
    for (auto& G : family_members(f, max_order)) out.push_back(std::move(G));
  return out;
}

json triple(Elem const& e) { return json::array({e.i, e.j, e.k}); }

json r_json(FamilyGroup const& G) { return G.r() ? json(*G.r()) : json(nullptr); }

std::string r_text(FamilyGroup const& G) { return G.r() ? std::to_string(*G.r()) : ""; }

std::string_view mode_name(EnumerationMode m) {
  return m == EnumerationMode::Pruned ? "pruned" : "brute";
}

std::string matched_list(SweepRow const& row) {
  std::set<std::string> labels;
  for (auto const& w : row.witnesses) labels.insert(w.matched ? case_label(*w.matched) : "-");
  std::string out;
  for (auto const& l : labels) out += (out.empty() ? "" : ";") + l;
  return out;
}

json row_json(SweepRow const& row) {
  json wit = json::array();
  for (auto const& w : row.witnesses)
    wit.push_back({{"image_a", triple(w.map.image_a)},
                   {"image_b", triple(w.map.image_b)},
                   {"matched_case", w.matched ? json(case_label(*w.matched)) : json(nullptr)}});
  return {{"family", to_string(row.group.family())},
          {"n", row.group.n()},
          {"r", r_json(row.group)},
          {"order", row.group.order()},
          {"center_order", row.center_order},
          {"center_cyclic", row.center_cyclic},
          {"frattini_order", row.frattini_order},
          {"derived_order", row.derived_order},
          {"d_z_phi", row.d_z_phi},
          {"star", row.star},
          {"phi_fixing_involutions",
           {{"total", row.total}, {"inner", row.inner}, {"noninner", row.total - row.inner}}},
          {"noninner_witnesses", wit},
          {"runtime_ms", row.runtime_ms}};
}

char const* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "md" || s == "markdown") return OutputFormat::Markdown;
  return std::nullopt;
}

void check_config(SweepConfig const& cfg) {
  if (cfg.families.empty()) throw ConfigError("no family selected");
  if (cfg.max_order < 1) throw ConfigError("max-order must be positive");
  if (cfg.max_order > kDefaultOrderCap)
    throw ConfigError(fmt::format("max-order {} exceeds engine cap {}", cfg.max_order, kDefaultOrderCap));
  if (cfg.mode == EnumerationMode::Brute && cfg.max_order > (std::uint64_t{1} << 10))
    throw ConfigError("brute mode needs max-order <= 1024");
  if (cfg.jobs < 1) throw ConfigError("jobs must be at least 1");
}

bool star_predicted(FamilyGroup const& G) {
  return G.family() == Family::Q1 && G.r() && *G.r() >= 2;
}

std::string case_label(WitnessCase const& wc) {
  switch (wc.id) {
    case CaseId::C1ii:
      return fmt::format("{}:m={}", to_string(wc.id), wc.m);
    case CaseId::C1iii_a1:
    case CaseId::C1iii_a2:
      return fmt::format("{}:m={},s={}", to_string(wc.id), wc.m, wc.s);
    default:
      return std::string(to_string(wc.id));
  }
}

SweepRow analyze(FamilyGroup const& G, EnumerationOptions const& opts, bool timing) {
  auto const t0 = std::chrono::steady_clock::now();
  SweepRow row{G, 0, false, 0, 0, 0, false, 0, 0, {}, 0};
  auto const Z = center(G);
  auto const phi = frattini(G);
  row.center_order = Z.order();
  row.center_cyclic = is_cyclic(Z);
  row.frattini_order = phi.order();
  row.derived_order = derived_subgroup(G).order();
  row.d_z_phi = d_of(center_of(phi));
  auto const rep = star_condition(G, opts);
  row.star = rep.star_holds;
  row.total = rep.total;
  row.inner = rep.inner_count;
  for (auto const& m : rep.noninner_witnesses) {
    auto const matches = matching_cases(m);
    row.witnesses.push_back(
        {m, matches.empty() ? std::nullopt : std::optional<WitnessCase>(matches.front())});
  }
  if (timing)
    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return row;
}

SweepResult run_sweep(SweepConfig const& cfg) {
  check_config(cfg);
  auto const groups = groups_of(cfg.families, cfg.max_order);
  EnumerationOptions opts;
  opts.mode = cfg.mode;
  opts.pruned_cap = std::max(opts.pruned_cap, cfg.max_order);
  std::vector<std::optional<SweepRow>> rows(groups.size());
  std::vector<std::string> errors(groups.size());
  parallel_for(groups.size(), cfg.jobs, [&](std::size_t idx) {
    try {
      rows[idx] = analyze(groups[idx], opts, cfg.timing);
    } catch (std::logic_error const& e) {
      errors[idx] = e.what();
    }
  });

  SweepResult result{cfg, {}, {}};
  for (std::size_t idx = 0; idx < groups.size(); ++idx) {
    auto const name = groups[idx].name();
    if (!rows[idx]) {
      result.discrepancies.push_back(fmt::format("{}: {}", name, errors[idx]));
      continue;
    }
    auto const& row = *rows[idx];
    bool const predicted = star_predicted(row.group);
    if (row.star != predicted)
      result.discrepancies.push_back(fmt::format(
          "{}: star-holds={} but predicted {}; {} of {} Phi-fixing involutions inner", name,
          row.star, predicted, row.inner, row.total));
    if (!row.star &&
        std::none_of(row.witnesses.begin(), row.witnesses.end(),
                     [](WitnessRow const& w) { return w.matched.has_value(); }))
      result.discrepancies.push_back(
          fmt::format("{}: no non-inner witness matches a listed case", name));
    result.rows.push_back(row);
  }
  return result;
}

std::string render_row_json(SweepRow const& row) { return row_json(row).dump(); }

std::string render(SweepResult const& result, OutputFormat fmt) {
  auto const star_count = std::count_if(result.rows.begin(), result.rows.end(),
                                        [](SweepRow const& r) { return r.star; });
  switch (fmt) {
    case OutputFormat::Json: {
      json families = json::array();
      for (auto f : result.config.families) families.push_back(to_string(f));
      json rows = json::array();
      for (auto const& row : result.rows) rows.push_back(row_json(row));
      json doc{{"config",
                {{"families", families},
                 {"max_order", result.config.max_order},
                 {"mode", mode_name(result.config.mode)},
                 {"seed", result.config.seed}}},
               {"rows", rows},
               {"summary",
                {{"groups", result.rows.size()},
                 {"star_holds", star_count},
                 {"consistent", result.consistent()},
                 {"discrepancies", result.discrepancies}}}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out =
          "family,n,r,order,center_order,center_cyclic,frattini_order,derived_order,d_z_phi,"
          "star,total,inner,noninner,matched_cases,runtime_ms\n";
      for (auto const& row : result.rows)
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                           to_string(row.group.family()), row.group.n(), r_text(row.group),
                           row.group.order(), row.center_order, row.center_cyclic,
                           row.frattini_order, row.derived_order, row.d_z_phi, row.star, row.total,
                           row.inner, row.total - row.inner, matched_list(row), row.runtime_ms);
      return out;
    }
    case OutputFormat::Markdown: {
      std::string out =
          "| group | order | Z | Z cyclic | Phi | G' | d(Z(Phi)) | star | involutions | inner | "
          "matched | ms |\n"
          "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
      for (auto const& row : result.rows)
        out += fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |\n",
                           row.group.name(), row.group.order(), row.center_order,
                           yes_no(row.center_cyclic), row.frattini_order, row.derived_order,
                           row.d_z_phi, yes_no(row.star), row.total, row.inner,
                           row.witnesses.empty() ? "" : matched_list(row), row.runtime_ms);
      out += fmt::format("\n{} groups, star holds for {}. {}\n", result.rows.size(), star_count,
                         result.consistent() ? "Consistent with prediction."
                                             : "DISCREPANCIES:");
      for (auto const& d : result.discrepancies) out += "- " + d + "\n";
      return out;
    }
  }
  return {};
}

GroupInfo group_info(FamilyGroup const& G) {
  GroupInfo info{G, 0, false, 0, 0, 0, 0, false, 0, 0, false};
  auto const Z = center(G);
  auto const phi = frattini(G);
  auto const zphi = center_of(phi);
  info.center_order = Z.order();
  info.center_cyclic = is_cyclic(Z);
  info.frattini_order = phi.order();
  info.derived_order = derived_subgroup(G).order();
  info.omega1_center_order = omega1(Z).order();
  info.center_frattini_order = zphi.order();
  info.center_frattini_cyclic = is_cyclic(zphi);
  info.d_g = d_of_group(G);
  info.d_z_phi = d_of(zphi);
  info.centralizer_equality = centralizer(zphi) == phi;
  return info;
}

std::string render(GroupInfo const& info, OutputFormat fmt) {
  auto const& G = info.group;
  switch (fmt) {
    case OutputFormat::Json: {
      json doc{{"family", to_string(G.family())},
               {"n", G.n()},
               {"r", r_json(G)},
               {"order", G.order()},
               {"center_order", info.center_order},
               {"center_cyclic", info.center_cyclic},
               {"frattini_order", info.frattini_order},
               {"derived_order", info.derived_order},
               {"omega1_center_order", info.omega1_center_order},
               {"center_frattini_order", info.center_frattini_order},
               {"center_frattini_cyclic", info.center_frattini_cyclic},
               {"d_g", info.d_g},
               {"d_z_phi", info.d_z_phi},
               {"centralizer_equality", info.centralizer_equality}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return fmt::format(
          "family,n,r,order,center_order,center_cyclic,frattini_order,derived_order,"
          "omega1_center_order,center_frattini_order,d_g,d_z_phi,centralizer_equality\n"
          "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
          to_string(G.family()), G.n(), r_text(G), G.order(), info.center_order,
          info.center_cyclic, info.frattini_order, info.derived_order, info.omega1_center_order,
          info.center_frattini_order, info.d_g, info.d_z_phi, info.centralizer_equality);
    case OutputFormat::Markdown:
      return fmt::format(
          "{}\n"
          "  order            {}\n"
          "  |Z|              {} ({})\n"
          "  |Phi|            {}\n"
          "  |G'|             {}\n"
          "  |Omega_1(Z)|     {}\n"
          "  |Z(Phi)|         {} ({}, d = {})\n"
          "  d(G)             {}\n"
          "  C(Z(Phi)) = Phi  {}\n",
          G.name(), G.order(), info.center_order, info.center_cyclic ? "cyclic" : "not cyclic",
          info.frattini_order, info.derived_order, info.omega1_center_order,
          info.center_frattini_order, info.center_frattini_cyclic ? "cyclic" : "not cyclic",
          info.d_z_phi, info.d_g, yes_no(info.centralizer_equality));
  }
  return {};
}

std::string render(WitnessVerdict const& v, OutputFormat fmt) {
  auto const order = v.order ? fmt::format("{}", *v.order) : std::string("?");
  auto const conv = v.convention ? std::string(to_string(*v.convention)) : std::string("none");
  switch (fmt) {
    case OutputFormat::Json: {
      json claims = json::array();
      for (auto const& c : v.claims)
        claims.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      json doc{{"case", case_label(v.wc)},
               {"family", to_string(v.group.family())},
               {"n", v.group.n()},
               {"r", r_json(v.group)},
               {"image_a", triple(v.map.image_a)},
               {"image_b", triple(v.map.image_b)},
               {"order", v.order ? json(*v.order) : json(nullptr)},
               {"convention", v.convention ? json(to_string(*v.convention)) : json(nullptr)},
               {"claims", claims},
               {"passed", v.passed()}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "claim,passed,detail\n";
      for (auto const& c : v.claims) out += fmt::format("{},{},\"{}\"\n", c.name, c.passed, c.detail);
      return out;
    }
    case OutputFormat::Markdown: {
      std::string out = fmt::format("case {} on {}: {}\n", case_label(v.wc), v.group.name(),
                                    to_string(v.map));
      for (auto const& c : v.claims)
        out += fmt::format("  [{}] {}: {}\n", c.passed ? "pass" : "FAIL", c.name, c.detail);
      out += fmt::format("  order {}, commutator convention {}\n", order, conv);
      out += v.passed() ? "pass\n" : "FAIL\n";
      return out;
    }
  }
  return {};
}

namespace {

std::uint64_t predicted_order(FamilyGroup const& G) {
  switch (G.family()) {
    case Family::Q1:
      return std::uint64_t{1} << (G.n() + *G.r());
    case Family::Q2:
      return std::uint64_t{1} << (3 * *G.r());
    case Family::R3:
      return std::uint64_t{1} << (3 * G.n());
  }
  return 0;
}

struct GroupChecks {
  std::vector<SelfTest> tests;

  SelfTest& at(std::string_view name) {
    for (auto& t : tests)
      if (t.name == name) return t;
    tests.push_back({std::string(name), true, 0, {}});
    return tests.back();
  }
  void fail(std::string_view name, std::string detail) {
    auto& t = at(name);
    if (t.passed) t.detail = std::move(detail);
    t.passed = false;
  }
};

GroupChecks check_group(FamilyGroup const& G, OracleConfig const& cfg, std::uint64_t seed) {
  GroupChecks out;
  out.tests.reserve(8);
  auto const name = G.name();
  auto const elems = G.all_elements();
  auto const N = elems.size();
  auto const e = G.identity();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, N - 1);
  bool const exhaustive = G.order() <= cfg.exhaustive_order;

  // normal forms: canonical enumeration, index round trip, relations, generation
  {
    auto& t = out.at("normal-form");
    if (N != predicted_order(G))
      out.fail("normal-form", fmt::format("{}: {} normal forms, expected {}", name, N, predicted_order(G)));
    for (std::size_t idx = 0; idx < N; ++idx) {
      auto const& g = elems[idx];
      if (!G.is_canonical(g) || G.index(g) != idx || G.element_at(idx) != g || G.normalize(g) != g)
        out.fail("normal-form", fmt::format("{}: bad normal form {}", name, to_string(g)));
    }
    if (auto rel = violated_relation(G, G.a(), G.b()))
      out.fail("normal-form", fmt::format("{}: relation {} fails", name, *rel));
    std::vector<char> seen(N, 0);
    std::vector<Elem> frontier{e};
    seen[G.index(e)] = 1;
    for (std::size_t h = 0; h < frontier.size(); ++h)
      for (auto const& s : {G.a(), G.b()}) {
        auto const y = G.mul(frontier[h], s);
        if (!seen[G.index(y)]) {
          seen[G.index(y)] = 1;
          frontier.push_back(y);
        }
      }
    if (frontier.size() != N)
      out.fail("normal-form", fmt::format("{}: a, b generate only {} elements", name, frontier.size()));
    t.checked += N;
  }

  // identity and inverse laws
  {
    auto& t = out.at("identity-inverse");
    for (auto const& g : elems) {
      auto const gi = G.inv(g);
      if (G.mul(e, g) != g || G.mul(g, e) != g || G.mul(g, gi) != e || G.mul(gi, g) != e)
        out.fail("identity-inverse", fmt::format("{}: fails at {}", name, to_string(g)));
    }
    t.checked += N;
  }

  // associativity, through a multiplication table when small
  {
    auto& t = out.at("associativity");
    if (exhaustive) {
      std::vector<std::uint32_t> table(N * N);
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
          table[x * N + y] = static_cast<std::uint32_t>(G.index(G.mul(elems[x], elems[y])));
      for (std::size_t x = 0; x < N; ++x) {
        std::vector<char> hit(N, 0);
        for (std::size_t y = 0; y < N; ++y) hit[table[x * N + y]] = 1;
        if (std::count(hit.begin(), hit.end(), 1) != static_cast<long>(N))
          out.fail("associativity", fmt::format("{}: row {} is not a permutation", name, x));
      }
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
          auto const xy = table[x * N + y];
          for (std::size_t z = 0; z < N; ++z)
            if (table[xy * N + z] != table[x * N + table[y * N + z]]) {
              out.fail("associativity", fmt::format("{}: ({},{},{})", name, to_string(elems[x]),
                                                    to_string(elems[y]), to_string(elems[z])));
              break;
            }
        }
      t.checked += N * N * N;
    } else {
      for (std::uint64_t s = 0; s < cfg.samples; ++s) {
        auto const& x = elems[pick(rng)];
        auto const& y = elems[pick(rng)];
        auto const& z = elems[pick(rng)];
        if (G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)))
          out.fail("associativity", fmt::format("{}: ({},{},{})", name, to_string(x),
                                                to_string(y), to_string(z)));
      }
      t.checked += cfg.samples;
    }
  }

  // closed-form power and commutator against repeated products
  {
    auto& t = out.at("power-commutator");
    auto const check_elem = [&](Elem const& g) {
      Elem cur = e;
      for (std::int64_t m = 0; m <= G.Ma(); ++m) {
        if (G.pow(g, m) != cur)
          out.fail("power-commutator", fmt::format("{}: {}^{}", name, to_string(g), m));
        cur = G.mul(cur, g);
      }
      if (G.pow(g, -1) != G.inv(g))
        out.fail("power-commutator", fmt::format("{}: {}^-1", name, to_string(g)));
      if (G.element_order(g) == 0 || G.pow(g, static_cast<std::int64_t>(G.element_order(g))) != e)
        out.fail("power-commutator", fmt::format("{}: order of {}", name, to_string(g)));
    };
    auto const check_pair = [&](Elem const& x, Elem const& y) {
      auto const explicit_c = G.mul(G.mul(G.inv(x), G.inv(y)), G.mul(x, y));
      if (G.commutator(x, y) != explicit_c ||
          commutator_as(Convention::InverseFirst, x, y, G) != explicit_c)
        out.fail("power-commutator",
                 fmt::format("{}: [{},{}]", name, to_string(x), to_string(y)));
    };
    if (exhaustive) {
      for (auto const& g : elems) check_elem(g);
      for (auto const& x : elems)
        for (auto const& y : elems) check_pair(x, y);
      t.checked += N + N * N;
    } else {
      std::uint64_t const k = std::min<std::uint64_t>(cfg.samples / 64, N);
      for (std::uint64_t s = 0; s < k; ++s) check_elem(elems[pick(rng)]);
      for (std::uint64_t s = 0; s < cfg.samples / 8; ++s) check_pair(elems[pick(rng)], elems[pick(rng)]);
      t.checked += k + cfg.samples / 8;
    }
  }

  // enumeration equivalence and inner-ness agreement
  {
    EnumerationOptions opts;
    opts.pruned_cap = std::max<std::uint64_t>(opts.pruned_cap, G.order());
    std::vector<Aut> all;
    try {
      all = enumerate_phi_fixing(G, opts);
    } catch (std::exception const& ex) {
      out.fail("inner-criterion", fmt::format("{}: {}", name, ex.what()));
    }
    auto& ti = out.at("inner-criterion");
    for (auto const& alpha : all) {
      if (is_inner_criterion(alpha) != is_inner_direct(alpha).has_value())
        out.fail("inner-criterion", fmt::format("{}: disagree on {}", name, to_string(alpha.map())));
      ++ti.checked;
    }
    if (G.order() <= cfg.brute_order) {
      auto& tb = out.at("pruned-vs-brute");
      EnumerationOptions brute = opts;
      brute.mode = EnumerationMode::Brute;
      brute.brute_cap = std::max<std::uint64_t>(brute.brute_cap, G.order());
      auto const b = enumerate_phi_fixing_involutions(G, brute);
      auto const p = enumerate_phi_fixing_involutions(G, opts);
      if (p != b)
        out.fail("pruned-vs-brute",
                 fmt::format("{}: pruned {} vs brute {} involutions", name, p.size(), b.size()));
      ++tb.checked;
    }
  }
  return out;
}

}  // namespace

std::vector<SelfTest> run_oracle(OracleConfig const& cfg) {
  if (cfg.max_order < 1 || cfg.max_order > kDefaultOrderCap)
    throw ConfigError(fmt::format("max-order must lie in [1, {}]", kDefaultOrderCap));
  auto const groups = groups_of({Family::Q1, Family::Q2, Family::R3}, cfg.max_order);
  std::vector<GroupChecks> per_group(groups.size());
  parallel_for(groups.size(), cfg.jobs, [&](std::size_t idx) {
    per_group[idx] = check_group(groups[idx], cfg, cfg.seed + idx);
  });
  std::vector<SelfTest> out;
  for (auto const* name : {"normal-form", "identity-inverse", "associativity", "power-commutator",
                           "pruned-vs-brute", "inner-criterion"})
    out.push_back({name, true, 0, {}});
  for (auto const& gc : per_group)
    for (auto const& t : gc.tests)
      for (auto& o : out)
        if (o.name == t.name) {
          o.checked += t.checked;
          if (!t.passed && o.passed) {
            o.passed = false;
            o.detail = t.detail;
          }
        }
  for (auto& o : out)
    if (o.passed) o.detail = fmt::format("{} groups", groups.size());
  return out;
}

std::string render(std::vector<SelfTest> const& tests, OutputFormat fmt) {
  bool const all = std::all_of(tests.begin(), tests.end(), [](SelfTest const& t) { return t.passed; });
  switch (fmt) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (auto const& t : tests)
        arr.push_back({{"name", t.name}, {"passed", t.passed}, {"checked", t.checked}, {"detail", t.detail}});
      return json{{"self_tests", arr}, {"passed", all}}.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::string out = "name,passed,checked,detail\n";
      for (auto const& t : tests)
        out += fmt::format("{},{},{},\"{}\"\n", t.name, t.passed, t.checked, t.detail);
      return out;
    }
    case OutputFormat::Markdown: {
      std::string out;
      for (auto const& t : tests)
        out += fmt::format("[{}] {:<18} {:>12} checks  {}\n", t.passed ? "pass" : "FAIL", t.name,
                           t.checked, t.detail);
      out += all ? "all self-tests pass\n" : "SELF-TEST FAILURE\n";
      return out;
    }
  }
  return {};
}

}  // namespace twogroups
