#include "hv/case_table.hpp"

#include "hv/weylgrp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hv {

std::string CaseGroup::label() const {
  std::string out;
  for (const auto& m : modules) out += (out.empty() ? "" : "+") + m;
  return out;
}

namespace {

std::vector<std::string> words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// "beta1 = 1 1 2 2 1 0; beta2 = ..."
void define(OrbitCase& c, std::string_view table) {
  for (const auto& entry : split(table, ';')) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) continue;
    const auto name = words(entry.substr(0, eq));
    const auto coeffs = words(entry.substr(eq + 1));
    Root r(static_cast<Eigen::Index>(coeffs.size()));
    for (size_t k = 0; k < coeffs.size(); ++k) r(static_cast<Eigen::Index>(k)) = std::stoi(coeffs[k]);
    c.symbols[name.at(0)] = r;
  }
}

// "M1: a1 gamma2 | M2: ..."
std::vector<CaseModule> modules(std::string_view table) {
  std::vector<CaseModule> out;
  for (const auto& entry : split(table, '|')) {
    const auto colon = entry.find(':');
    out.push_back({words(entry.substr(0, colon)).at(0), words(entry.substr(colon + 1))});
  }
  return out;
}

OrbitCase make(std::string id, std::string_view type, int order, std::string anchor) {
  OrbitCase c;
  c.id = std::move(id);
  c.type = RootSystemType::parse(type);
  c.order = order;
  c.anchor = std::move(anchor);
  return c;
}

OrbitCase e6_o7() {
  OrbitCase c = make("E6.o7", "E6", 7, "E6, o(q)=7");
  define(c,
         "beta1 = 1 1 2 2 1 0; beta2 = 0 1 1 2 2 1; beta3 = 1 1 1 2 1 1;"
         "gamma1 = 1 1 2 2 1 1; gamma2 = 1 1 1 2 2 1; gamma3 = 1 1 1 2 1 0;"
         "gamma4 = 0 1 1 2 1 1; gamma5 = 1 1 1 1 1 1");
  c.generators = words("beta1 beta2 beta3");
  c.nonsimple = words("gamma1 gamma2 -gamma3 -gamma4 -gamma5");
  c.modules = modules("M1: a1 gamma2 a5 -gamma4 | M2: a3 gamma1 a6 -gamma3 | M3: a4 -gamma5 | M4: a2");
  c.groups = {{{"M1"}, 3, {}}, {{"M2"}, 3, {}}, {{"M3"}, 2, {}}, {{"M4"}, 2, {}}};
  c.bound_kind = BoundKind::LowerBound;
  c.bound = 36;
  return c;
}

OrbitCase exact_case(std::string_view type, int order, long long count) {
  const std::string t(type);
  OrbitCase c = make(t + ".o" + std::to_string(order), t, order, t + ", o(q)=" + std::to_string(order));
  c.has_lists = false;
  c.bound_kind = BoundKind::Exact;
  c.bound = count;
  return c;
}

OrbitCase e7_o11() {
  OrbitCase c = make("E7.o11", "E7", 11, "E7, o(q)=11");
  define(c,
         "beta1 = 1 2 2 3 2 1 0; beta2 = 1 1 2 2 2 2 1; beta3 = 1 1 2 3 2 1 1;"
         "gamma1 = 1 1 2 3 2 2 1; gamma2 = 1 2 2 3 2 1 1; gamma3 = 1 1 2 3 2 1 0;"
         "gamma4 = 1 1 2 2 2 1 1; gamma5 = 1 1 1 2 2 2 1");
  c.generators = words("beta1 beta2 beta3");
  c.nonsimple = words("gamma1 gamma2 -gamma3 -gamma4 -gamma5");
  c.modules = modules("M2: a2 gamma2 a7 -gamma3 | M4: a4 gamma1 a6 -gamma4 | M3: a3 -gamma5 | M1: a1 | M5: a5");
  c.errata = {{"decomposition", "M2 is printed with -gamma4, which also appears in M4; -gamma3 is in no printed module; read -gamma3"}};
  c.groups = {{{"M2"}, 3, {}}, {{"M4"}, 3, {}}, {{"M1"}, 2, {}}, {{"M3"}, 2, {}}, {{"M5"}, 2, {}}};
  c.bound_kind = BoundKind::LowerBound;
  c.bound = 72;
  return c;
}

OrbitCase e7_o13() {
  OrbitCase c = make("E7.o13", "E7", 13, "E7, o(q)=13");
  define(c,
         "sigma1 = 1 1 2 3 3 2 1; sigma2 = 1 2 2 3 2 2 1;"
         "tau1 = 1 2 2 3 3 2 1; tau2 = 1 1 2 3 2 2 1; tau3 = 1 2 2 3 2 1 1");
  c.generators = words("sigma1 sigma2");
  c.nonsimple = words("tau1 -tau2 -tau3");
  c.modules = modules("M2: a2 tau1 a5 -tau2 | M6: a6 -tau3 | M1: a1 | M3: a3 | M4: a4 | M7: a7");
  c.groups = {{{"M2"}, 3, {}}, {{"M1"}, 2, {}}, {{"M3"}, 2, {}}, {{"M4"}, 2, {}}, {{"M6"}, 2, {}}, {{"M7"}, 2, {}}};
  c.bound_kind = BoundKind::LowerBound;
  c.bound = 96;
  return c;
}

OrbitCase e8_o11() {
  OrbitCase c = make("E8.o11", "E8", 11, "E8, o(q)=11");
  define(c,
         "beta1 = 1 2 2 3 2 1 0 0; beta2 = 1 1 2 2 2 2 1 0; beta3 = 1 1 2 3 2 1 1 0;"
         "beta4 = 1 1 2 2 2 1 1 1; beta5 = 0 1 1 2 2 2 2 1; beta6 = 1 1 1 2 2 2 1 1;"
         "beta7 = 1 3 3 5 4 3 2 1; beta8 = 2 2 3 5 4 3 2 1;"
         "gamma1 = 1 1 2 3 2 2 1 0; gamma2 = 1 2 2 3 2 1 1 0; gamma3 = 1 1 2 3 2 1 0 0;"
         "gamma4 = 1 1 2 2 2 1 1 0; gamma5 = 1 1 1 2 2 2 1 0; gamma6 = 0 1 1 2 2 2 1 1;"
         "gamma7 = 1 1 2 2 1 1 1 1; gamma8 = 1 1 1 2 2 1 1 1; gamma9 = 1 1 2 3 2 1 1 1;"
         "gamma10 = 1 1 2 2 2 2 1 1; gamma11 = 1 1 1 2 2 2 2 1; gamma12 = 2 3 3 5 4 3 2 1;"
         "gamma13 = 2 2 4 5 4 3 2 1; gamma14 = 1 2 3 5 4 3 2 1; gamma15 = 2 2 3 4 4 3 2 1");
  c.generators = words("beta1 beta2 beta3 beta4 beta5 beta6 beta7 beta8");
  c.nonsimple = words(
      "gamma1 gamma2 -gamma3 -gamma4 -gamma5 -gamma6 -gamma7 -gamma8 gamma9 gamma10 gamma11 gamma12 gamma13 "
      "-gamma14 -gamma15");
  c.modules = modules(
      "M1: a1 gamma11 a7 gamma2 -gamma6 -gamma3 a2 gamma12 gamma13 -gamma14 |"
      "M2: a3 gamma10 -gamma5 a6 a8 -gamma8 -gamma15 gamma1 a4 gamma9 -gamma4 | M3: a5 -gamma7");
  c.errata = {{"roots", "gamma7 is printed as 1 1 2 2 1 2 1 1, which is not a root; read 1 1 2 2 1 1 1 1"}};
  c.bound_kind = BoundKind::None;
  return c;
}

OrbitCase e8_o13() {
  OrbitCase c = make("E8.o13", "E8", 13, "E8, o(q)=13");
  define(c,
         "sigma1 = 1 1 2 3 3 2 1 0; sigma2 = 1 2 2 3 2 2 1 0; sigma3 = 1 2 2 3 2 1 1 1;"
         "sigma4 = 1 1 2 3 2 2 1 1; sigma5 = 1 1 2 2 2 2 2 1; sigma6 = 2 3 4 6 5 3 2 1;"
         "tau1 = 1 2 2 3 3 2 1 0; tau2 = 1 1 2 3 2 2 1 0; tau3 = 1 2 2 3 2 1 1 0;"
         "tau4 = 1 1 2 3 2 1 1 1; tau5 = 1 1 2 2 2 2 1 1; tau6 = 1 1 1 2 2 2 2 1;"
         "tau7 = 1 2 2 3 2 2 1 1; tau8 = 1 1 2 3 3 2 1 1; tau9 = 1 1 2 3 2 2 2 1;"
         "tau10 = 2 3 4 6 4 3 2 1; tau11 = 2 3 4 6 5 4 2 1");
  c.generators = words("sigma1 sigma2 sigma3 sigma4 sigma5 sigma6");
  c.nonsimple = words("tau1 -tau2 -tau3 -tau4 -tau5 -tau6 tau7 tau8 tau9 -tau10 tau11");
  c.modules = modules(
      "M2: a2 tau1 a5 -tau2 -tau4 tau7 a6 -tau3 tau11 -tau10 a8 | M1: a1 | M3: a3 -tau6 | M4: a4 -tau5 tau9 a7");
  c.errata = {
      {"generators",
       "sigma3 is printed as 1 2 3 2 2 1 2 1, which is not a root; read 1 2 2 3 2 1 1 1, the value forced by the "
       "printed sigma6 = sigma1 + sigma3"},
      {"decomposition", "M2 is printed with tau10, whose root value is not in the eigenspace; read -tau10"}};
  c.bound_kind = BoundKind::None;
  return c;
}

OrbitCase e8_o16() {
  OrbitCase c = make("E8.o16", "E8", 16, "E8, o(q)=16");
  define(c,
         "xi1 = 1 2 3 4 3 2 1 0; xi2 = 1 1 2 3 3 3 2 1; xi3 = 1 2 2 4 3 2 1 1; xi4 = 1 2 2 3 3 2 2 1;"
         "eta1 = 2 2 3 4 3 2 1 0; eta2 = 1 2 2 4 3 2 1 0; eta3 = 1 2 2 3 3 2 1 1; eta4 = 1 2 2 3 2 2 2 1;"
         "eta5 = 1 1 2 3 3 2 2 1; eta6 = 1 2 2 3 3 3 2 1; eta7 = 1 2 2 4 3 2 2 1; eta8 = 1 2 3 4 3 2 1 1");
  c.generators = words("xi1 xi2 xi3 xi4");
  c.nonsimple = words("eta1 -eta2 -eta3 -eta4 -eta5 eta6 eta7 eta8");
  c.modules = modules("M1: a1 eta1 | M2: a2 a6 eta6 -eta5 | M3: a3 a8 eta8 -eta2 | M4: a4 a7 eta7 -eta3 | M5: a5 -eta4");
  CaseGroup m13{{"M1", "M3"}, 8, {}};
  for (const char* rep : {"", "a1", "a3", "a3 a8", "a1 a3", "a1 a3 a8", "a1 -eta2", "a1 a3 -eta2"})
    m13.representatives.push_back(words(rep));
  c.groups = {m13, {{"M4", "M5"}, 8, {}}, {{"M2"}, 3, {}}};
  c.bound_kind = BoundKind::LowerBound;
  c.bound = 192;
  return c;
}

OrbitCase e8_o17() {
  OrbitCase c = make("E8.o17", "E8", 17, "E8, o(q)=17");
  define(c,
         "eta1 = 2 2 3 4 3 2 1 0; eta6 = 1 2 2 3 3 3 2 1; eta7 = 1 2 2 4 3 2 2 1; eta8 = 1 2 3 4 3 2 1 1;"
         "xi1 = 1 2 3 4 3 2 1 0; xi2 = 1 1 2 3 3 3 2 1; xi3 = 1 2 2 4 3 2 1 1; xi4 = 1 2 2 3 3 2 2 1;"
         "xi5 = 2 2 3 4 3 2 1 1; xi6 = 1 2 3 4 3 2 2 1; xi7 = 1 2 2 4 3 3 2 1");
  c.generators = words("eta1 eta6 eta7 eta8");
  c.nonsimple = words("-xi1 -xi2 -xi3 -xi4 xi5 xi6 xi7");
  c.modules = modules("M2: a2 -xi2 | M5: a5 | M1: a1 -xi1 xi5 a8 | M3: a3 -xi3 xi6 a7 | M4: a4 -xi4 xi7 a6");
  c.groups = {{{"M1"}, 3, {}}, {{"M3"}, 3, {}}, {{"M2", "M4"}, 8, {}}, {{"M5"}, 2, {}}};
  c.bound_kind = BoundKind::LowerBound;
  c.bound = 144;
  return c;
}

OrbitCase e8_extrapolated(int order) {
  OrbitCase c = make("E8.o" + std::to_string(order), "E8", order, "E8, o(q)=" + std::to_string(order) + " (by analogy)");
  c.has_lists = false;
  c.bound_kind = BoundKind::AtLeast;
  c.bound = 144;
  c.extrapolated = true;
  return c;
}

std::string eps_name(int sign_a, int a, int sign_b, int b) {
  return std::string(sign_a < 0 ? "-" : "") + "e" + std::to_string(a) + (sign_b < 0 ? "-" : "+") + "e" +
         std::to_string(b);
}

}  // namespace

std::vector<OrbitCase> exceptional_cases() {
  std::vector<OrbitCase> out{e6_o7(), exact_case("E6", 10, 64), exact_case("E6", 11, 64), e7_o11(), e7_o13()};
  for (int m : {15, 16, 17}) out.push_back(exact_case("E7", m, 128));
  for (auto c : {e8_o11(), e8_o13(), e8_o16(), e8_o17()}) out.push_back(std::move(c));
  for (int m : {19, 21, 22, 23, 25, 26, 27, 28, 29}) out.push_back(e8_extrapolated(m));
  return out;
}

OrbitCase d_series_case(int n, int m) {
  const int i = m - n;
  if (n < 4 || i < 1 || i > n - 3 || (n - i) % 2 == 0)
    throw std::invalid_argument("no D_n case for n = " + std::to_string(n) + ", m = " + std::to_string(m));
  const std::string t = "D" + std::to_string(n);
  OrbitCase c = make(t + ".o" + std::to_string(m), t, m, "D_n, o(q)=n+i with n=" + std::to_string(n) + ", i=" + std::to_string(i));
  const RootSystem rs(c.type);
  auto add = [&](int sa, int a, int sb, int b) {
    RatVec eps = RatVec::Zero(n);
    eps(a - 1) += Rational(sa);
    eps(b - 1) += Rational(sb);
    const auto r = rs.from_epsilon(eps);
    if (!r) throw std::logic_error("not a root: " + eps_name(sa, a, sb, b));
    const std::string name = eps_name(sa, a, sb, b);
    c.symbols[name] = *r;
    return name;
  };
  for (int j = 1; 2 * j < n - i; ++j) c.generators.push_back(add(1, j, 1, n - j - i));
  for (int j = 1; 2 * j < n - i - 1; ++j) c.nonsimple.push_back(add(1, j, 1, n - 1 - j - i));
  for (int k = 1; 2 * k < n + 1 - i; ++k) c.nonsimple.push_back(add(-1, k, -1, n + 1 - k - i));
  auto simple = [&](int j) { return j < n ? add(1, j, -1, j + 1) : add(1, n - 1, 1, n); };
  if (i == n - 3) {
    for (int j = 1; j <= n; ++j) {
      CaseModule mod{"M" + std::to_string(j), {simple(j)}};
      if (j == 2) mod.elements.push_back(add(-1, 1, -1, 3));
      c.modules.push_back(mod);
    }
    c.component_counts.assign(static_cast<size_t>(n), 2);
    c.bound_kind = BoundKind::Exact;
    c.bound = 1LL << n;
    return c;
  }
  const int big = (n - i - 3) / 2;
  for (int j = 1; j <= big; ++j)
    c.modules.push_back({"M" + std::to_string(j),
                         {simple(j), add(-1, j + 1, -1, n - j - i), add(1, j, 1, n - j - 1 - i),
                          add(1, n - j - 1 - i, -1, n - j - i)}});
  const int two = (n - i + 1) / 2;
  c.modules.push_back({"M'" + std::to_string(two), {simple(two), add(-1, two - 1, -1, two + 1)}});
  std::vector<int> lines{(n - i - 1) / 2};
  for (int j = n - i; j <= n; ++j) lines.push_back(j);
  for (int j : lines) c.modules.push_back({"M'" + std::to_string(j), {simple(j)}});
  c.component_counts.assign(static_cast<size_t>(big), 3);
  c.component_counts.insert(c.component_counts.end(), static_cast<size_t>(i + 3), 2);
  c.bound_kind = BoundKind::LowerBound;
  long long bound = 1LL << (i + 3);
  for (int k = 0; k < big; ++k) bound *= 3;
  c.bound = bound;
  return c;
}

std::vector<OrbitCase> all_cases(int d_max) {
  std::vector<OrbitCase> out = exceptional_cases();
  for (int n = 4; n <= d_max; ++n)
    for (int m = (n + 1) | 1; m <= 2 * n - 3; m += 2) out.push_back(d_series_case(n, m));
  return out;
}

std::optional<OrbitCase> find_case(std::string_view id, int d_max) {
  for (auto& c : all_cases(d_max))
    if (c.id == id) return c;
  return std::nullopt;
}

Root resolve_symbol(const RootSystem& rs, const OrbitCase& c, std::string_view symbol) {
  if (const auto it = c.symbols.find(std::string(symbol)); it != c.symbols.end()) return it->second;
  if (!symbol.empty() && symbol.front() == '-') return Root(-resolve_symbol(rs, c, symbol.substr(1)));
  if (symbol.size() >= 2 && symbol.front() == 'a') {
    const int k = std::stoi(std::string(symbol.substr(1)));
    if (k >= 1 && k <= rs.rank()) return rs.simple_root(k - 1);
  }
  throw std::invalid_argument(c.id + ": unknown symbol " + std::string(symbol));
}

std::string name_root(const RootSystem& rs, const OrbitCase& c, const Root& r) {
  for (int k = 0; k < rs.rank(); ++k)
    if (r == rs.simple_root(k)) return "a" + std::to_string(k + 1);
  for (const auto& [name, root] : c.symbols) {
    if (root == r) return name;
    if (Root(-root) == r && name.front() != '-') return "-" + name;
  }
  return "[" + format_root(r) + "]";
}

namespace {

using RootSet = std::set<std::vector<int>>;

RootSet as_set(const std::vector<Root>& roots) {
  RootSet out;
  for (const auto& r : roots) out.insert(to_std(r));
  return out;
}

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (size_t k = 0; k < names.size(); ++k) out += (k ? " " : "") + names[k];
  return out + "}";
}

std::string names_of(const RootSystem& rs, const OrbitCase& c, const std::vector<Root>& roots) {
  std::vector<std::string> names;
  for (const auto& r : roots) names.push_back(name_root(rs, c, r));
  return braces(names);
}

std::vector<Root> resolve_all(const RootSystem& rs, const OrbitCase& c, const std::vector<std::string>& symbols) {
  std::vector<Root> out;
  for (const auto& s : symbols) out.push_back(resolve_symbol(rs, c, s));
  return out;
}

std::string errata_for(const OrbitCase& c, std::string_view item) {
  std::string out;
  for (const auto& e : c.errata)
    if (e.item == item) out += " [erratum: " + e.note + "]";
  return out;
}

std::string big_str(const BigCount& b) { return b.str(); }

std::string primes_str(const std::vector<int>& primes) {
  std::string out;
  for (int p : primes) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out;
}

struct Context {
  RootSystem rs;
  StructureConstants sc;
  NilModule nm;
  std::vector<Submodule> components;
};

Context context_for(const OrbitCase& c) {
  RootSystem rs(c.type);
  StructureConstants sc = structure_constants(rs);
  NilModule nm = build_nqs(rs, QOrder::finite(c.order));
  auto comps = decompose(rs, nm, sc);
  return {std::move(rs), std::move(sc), std::move(nm), std::move(comps)};
}

// Components covered by the support, or nullopt if it cuts one.
std::optional<Submodule> as_union(const Context& ctx, const std::vector<Root>& support) {
  const RootSet s = as_set(support);
  std::vector<Submodule> parts;
  size_t covered = 0;
  for (const auto& comp : ctx.components) {
    const RootSet cs = as_set(comp.support);
    size_t inside = 0;
    for (const auto& r : cs) inside += s.count(r);
    if (inside == 0) continue;
    if (inside != cs.size()) return std::nullopt;
    covered += inside;
    parts.push_back(comp);
  }
  if (covered != s.size()) return std::nullopt;
  return join(ctx.rs, parts);
}

CaseBound bound_from(const OrbitCase& c, const Context& ctx, const OrbitConfig& config) {
  CaseBound out;
  auto record = [&](GroupCount g) {
    if (g.count.refused || !g.count.stable) {
      out.complete = false;
      out.prime_shortage = out.prime_shortage || g.count.prime_shortage;
      if (!out.note.empty()) out.note += "; ";
      out.note += g.label + ": " + (g.count.refused ? g.count.note : "unstable across primes");
    } else {
      out.product *= g.count.count;
    }
    out.groups.push_back(std::move(g));
  };
  if (!c.groups.empty()) {
    for (const auto& g : c.groups) {
      std::vector<Root> support;
      for (const auto& name : g.modules) {
        const auto it = std::find_if(c.modules.begin(), c.modules.end(), [&](const CaseModule& m) { return m.name == name; });
        if (it == c.modules.end()) throw std::logic_error(c.id + ": group names unknown module " + name);
        for (const auto& r : resolve_all(ctx.rs, c, it->elements)) support.push_back(r);
      }
      const auto module = as_union(ctx, support);
      if (!module) {
        GroupCount gc{g.label(), g.expected, {}};
        gc.count.refused = true;
        gc.count.note = "not a union of computed submodules";
        record(std::move(gc));
        continue;
      }
      std::vector<FieldVector> queries;
      for (const auto& rep : g.representatives) {
        FieldVector v;
        for (const auto& s : rep) v.emplace_back(resolve_symbol(ctx.rs, c, s), 1);
        queries.push_back(v);
      }
      record({g.label(), g.expected, orbit_count(ctx.rs, ctx.sc, ctx.nm, *module, config, queries)});
    }
    return out;
  }
  if (c.bound_kind == BoundKind::Exact) {
    Submodule all;
    all.support = ctx.nm.basis;
    out.whole = orbit_count(ctx.rs, ctx.sc, ctx.nm, all, config);
    out.prime_shortage = out.whole->prime_shortage;
  }
  for (const auto& comp : ctx.components)
    record({names_of(ctx.rs, c, comp.support), 0, orbit_count(ctx.rs, ctx.sc, ctx.nm, comp, config)});
  return out;
}

}  // namespace

CaseBound case_bound(const OrbitCase& c, const OrbitConfig& config) { return bound_from(c, context_for(c), config); }

std::vector<ClaimRecord> verify_case(const OrbitCase& c, const OrbitConfig& config) {
  std::vector<ClaimRecord> out;
  std::optional<Context> ctx;
  try {
    ctx.emplace(context_for(c));
  } catch (const HypothesisError& e) {
    out.push_back({c.id + ".orbits", c.anchor, "eigenspace analysis", e.what(), ClaimStatus::Skipped});
    return out;
  }
  const RootSystem& rs = ctx->rs;
  const std::string anchor = c.anchor;

  if (c.has_lists) {
    std::vector<Root> gens;
    for (const auto& g : ctx->nm.generators)
      if (RootSystem::height(g) > 0) gens.push_back(g);
    std::vector<Root> expected_gens;
    for (auto r : resolve_all(rs, c, c.generators)) expected_gens.push_back(RootSystem::height(r) > 0 ? r : Root(-r));
    out.push_back(make_claim(c.id + ".generators", anchor + ": root subgroups generating C_G(s) with T",
                             "+-" + braces(c.generators) + errata_for(c, "generators"), "+-" + names_of(rs, c, gens),
                             as_set(gens) == as_set(expected_gens)));

    std::vector<Root> nonsimple;
    for (const auto& r : ctx->nm.basis)
      if (std::abs(RootSystem::height(r)) != 1) nonsimple.push_back(r);
    out.push_back(make_claim(c.id + ".roots", anchor + ": non-simple roots with alpha(s) = q",
                             braces(c.nonsimple) + errata_for(c, "roots"), names_of(rs, c, nonsimple),
                             as_set(nonsimple) == as_set(resolve_all(rs, c, c.nonsimple))));

    std::set<RootSet> expected_parts, computed_parts;
    std::string expected_text, computed_text;
    for (const auto& m : c.modules) {
      expected_parts.insert(as_set(resolve_all(rs, c, m.elements)));
      expected_text += (expected_text.empty() ? "" : " ") + m.name + "=" + braces(m.elements);
    }
    std::string sizes;
    for (const auto& comp : ctx->components) {
      computed_parts.insert(as_set(comp.support));
      computed_text += (computed_text.empty() ? "" : " ") + names_of(rs, c, comp.support);
      sizes += (sizes.empty() ? "" : ",") + std::to_string(comp.dim());
    }
    out.push_back(make_claim(c.id + ".decomposition", anchor + ": decomposition of N_{q,s} into submodules",
                             expected_text + errata_for(c, "decomposition"), computed_text + " sizes " + sizes,
                             expected_parts == computed_parts));
  }

  const CaseBound bound = bound_from(c, *ctx, config);
  std::string expected_counts, computed_counts;
  bool counts_ok = bound.complete;
  if (!c.groups.empty()) {
    for (const auto& g : bound.groups) {
      expected_counts += (expected_counts.empty() ? "" : ", ") + g.label + ": " + std::to_string(g.expected);
      computed_counts += (computed_counts.empty() ? "" : ", ") + g.label + ": " +
                         (g.count.refused ? "refused" : std::to_string(g.count.count));
      counts_ok = counts_ok && g.count.count == g.expected;
    }
    for (size_t k = 0; k < c.groups.size(); ++k) {
      const auto& reps = c.groups[k].representatives;
      if (reps.empty()) continue;
      const auto& classes = bound.groups[k].count.query_classes;
      const std::set<long long> distinct(classes.begin(), classes.end());
      expected_counts += "; " + std::to_string(reps.size()) + " listed representatives in distinct orbits";
      computed_counts += "; listed representatives meet " + std::to_string(distinct.size()) + " orbits";
      counts_ok = counts_ok && distinct.size() == reps.size() && !distinct.count(-1);
    }
  } else {
    std::vector<long long> got;
    for (const auto& g : bound.groups) {
      computed_counts += (computed_counts.empty() ? "" : ", ") + g.label + ": " +
                         (g.count.refused ? "refused" : std::to_string(g.count.count));
      got.push_back(g.count.count);
    }
    if (!c.component_counts.empty()) {
      auto want = c.component_counts;
      std::sort(want.rbegin(), want.rend());
      std::sort(got.rbegin(), got.rend());
      for (long long w : want) expected_counts += (expected_counts.empty() ? "" : ",") + std::to_string(w);
      expected_counts = "per-submodule counts " + expected_counts;
      counts_ok = counts_ok && got == want;
    } else if (c.bound_kind == BoundKind::Exact) {
      expected_counts = "whole space " + std::to_string(c.bound);
      const bool whole_ok = bound.whole && !bound.whole->refused && bound.whole->stable;
      computed_counts = "whole space " + (whole_ok ? std::to_string(bound.whole->count) : std::string("refused")) +
                        "; per submodule " + computed_counts;
      counts_ok = whole_ok && bound.whole->count == c.bound;
    } else {
      expected_counts = "paper-silent";
    }
  }
  if (!bound.groups.empty() && !bound.groups[0].count.primes_used.empty())
    computed_counts += " (p = " + primes_str(bound.groups[0].count.primes_used) + ")";
  if (!bound.note.empty()) computed_counts += " [" + bound.note + "]";

  const bool informational = c.bound_kind == BoundKind::None || c.bound_kind == BoundKind::AtLeast;
  if (c.has_lists || c.bound_kind == BoundKind::Exact || informational) {
    ClaimRecord r{c.id + ".orbits", anchor + ": C_G(s)-orbit counts", expected_counts, computed_counts,
                  informational ? ClaimStatus::Informational : (counts_ok ? ClaimStatus::Pass : ClaimStatus::Fail)};
    out.push_back(std::move(r));
  }

  if (bound.prime_shortage) {
    for (auto& r : out)
      if (r.claim_id == c.id + ".orbits") r.status = ClaimStatus::Skipped;
  }
  if (c.bound_kind == BoundKind::Exact && !c.has_lists) return out;
  const std::string product = big_str(bound.product) + (bound.complete ? "" : " (partial)");
  switch (c.bound_kind) {
    case BoundKind::LowerBound:
      out.push_back(make_claim(c.id + ".bound", anchor + ": number of C_G(s)-orbits on N_{q,s}",
                               ">= " + std::to_string(c.bound), product, bound.complete && bound.product == c.bound));
      break;
    case BoundKind::Exact: {
      const bool whole_ok = bound.whole && !bound.whole->refused && bound.whole->stable;
      out.push_back(make_claim(c.id + ".bound", anchor + ": number of C_G(s)-orbits on N_{q,s}",
                               std::to_string(c.bound),
                               (whole_ok ? std::to_string(bound.whole->count) : std::string("refused")) +
                                   " (product over submodules " + product + ")",
                               whole_ok && bound.whole->count == c.bound));
      break;
    }
    case BoundKind::AtLeast:
      out.push_back(make_claim(c.id + ".bound", anchor + ": number of C_G(s)-orbits on N_{q,s}",
                               ">= " + std::to_string(c.bound), product, bound.complete && bound.product >= c.bound));
      break;
    case BoundKind::None:
      out.push_back({c.id + ".bound", anchor + ": number of C_G(s)-orbits on N_{q,s}", "paper-silent",
                     ">= " + product, ClaimStatus::Informational});
      break;
  }
  if (bound.prime_shortage) {
    out.back().status = ClaimStatus::Skipped;
    out.back().computed += " [" + bound.note + "]";
  }
  return out;
}

}  // namespace hv
