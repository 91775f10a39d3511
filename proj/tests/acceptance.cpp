// One line per acceptance criterion: "criterion N: PASS|FAIL ...".

#include "hv/affine_hecke.hpp"
#include "hv/case_table.hpp"
#include "hv/partitions.hpp"
#include "hv/torus.hpp"
#include "hv/weylgrp.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace hv;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    problems.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

RootSystem rs_of(const std::string& name) { return RootSystem(RootSystemType::parse(name)); }

Outcome irr_counts() {
  Outcome out;
  const std::map<std::string, long long> stated = {{"E6", 25}, {"E7", 60}, {"E8", 112}, {"F4", 25}, {"G2", 6}};
  for (const auto& [name, want] : stated) {
    const RootSystem rs = rs_of(name);
    out.require(irr_count(rs.type()) == want, name + " tabulated irr count " + str(irr_count(rs.type())));
    if (const auto classes = conjugacy_class_count(rs))
      out.require(*classes == want, name + " has " + str(*classes) + " conjugacy classes, want " + str(want));
    else
      out.require(name == "E8", name + " class count unavailable");
  }
  std::vector<std::string> classical;
  for (int n = 1; n <= 9; ++n) classical.push_back("A" + str(n));
  for (int n = 2; n <= 7; ++n) classical.push_back("B" + str(n));
  for (int n = 3; n <= 7; ++n) classical.push_back("C" + str(n));
  for (int n = 4; n <= 7; ++n) classical.push_back("D" + str(n));
  for (const auto& name : classical) {
    const RootSystem rs = rs_of(name);
    const auto classes = conjugacy_class_count(rs);
    out.require(classes && *classes == irr_count(rs.type()),
                name + ": formula " + str(irr_count(rs.type())) + " vs classes " + (classes ? str(*classes) : "n/a"));
  }
  out.summary = "5 exceptional + " + str(classical.size()) + " classical groups; E8 from the table (|W| over budget)";
  return out;
}

Outcome partition_suite() {
  Outcome out;
  auto seq = [](int from, int to, BigCount (*f)(int)) {
    std::vector<BigCount> v;
    for (int n = from; n <= to; ++n) v.push_back(f(n));
    return v;
  };
  auto big = [](std::initializer_list<long long> xs) {
    std::vector<BigCount> v;
    for (long long x : xs) v.emplace_back(x);
    return v;
  };
  out.require(seq(3, 6, partition_count) == big({3, 5, 7, 11}), "p(3..6)");
  out.require(seq(4, 12, typeD_count) == big({13, 18, 37, 55, 100, 150, 251, 376, 599}), "P(4..12)");
  out.require(seq(4, 12, typeD_bound) == big({16, 32, 48, 96, 144, 288, 432, 864, 1296}), "D(4..12)");
  const BigCount two = 2;
  BigCount pow2 = 2;
  for (int n = 2; n <= 500; ++n) {
    pow2 *= 2;
    out.require(pow2 > partition_count(n + 1), "2^n > p(n+1) at n = " + str(n));
  }
  for (int n = 8; n <= 500; ++n)
    out.require(partition_count(n) <= two * partition_count(n - 2), "p(n) <= 2p(n-2) at n = " + str(n));
  for (int n = 11; n <= 200; ++n)
    out.require(3 * typeD_count(n) > typeD_count(n + 2), "3P(n) > P(n+2) at n = " + str(n));
  for (int n = 4; n <= 200; ++n) out.require(typeD_bound(n) > typeD_count(n), "D(n) > P(n) at n = " + str(n));
  long long domain = 0;
  for (int n = 8; n <= 60; ++n) {
    const TauCheck t = check_tau(n);
    domain += t.domain_size;
    out.require(t.injective && t.well_defined, "tau at n = " + str(n));
  }
  out.summary = "tau checked on " + str(domain) + " partitions";
  return out;
}

Outcome valid_order_lists() {
  Outcome out;
  auto check = [&](const std::string& name, const std::vector<int>& want) {
    const auto got = valid_orders(rs_of(name));
    out.require(got == want, name + " valid orders differ");
  };
  check("E6", {7, 10, 11});
  check("E7", {11, 13, 15, 16, 17});
  check("E8", {11, 13, 16, 17, 19, 21, 22, 23, 25, 26, 27, 28, 29});
  for (int n = 1; n <= 12; ++n) check("A" + str(n), {});
  for (int n = 4; n <= 12; ++n) {
    std::vector<int> want;
    for (int m = n + 1; m <= 2 * n - 3; ++m)
      if (m % 2 == 1) want.push_back(m);
    check("D" + str(n), want);
  }
  out.summary = "E6, E7, E8, A1..A12, D4..D12";
  return out;
}

const std::vector<std::string> kExceptional = {"E6.o7", "E7.o11", "E7.o13", "E8.o11", "E8.o13", "E8.o16", "E8.o17"};

struct CaseSweep {
  std::map<std::string, ClaimRecord> records;
  double seconds = 0;
};

const CaseSweep& sweep() {
  static const CaseSweep s = [] {
    CaseSweep out;
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<OrbitCase> cases;
    for (const auto& id : kExceptional) cases.push_back(*find_case(id));
    for (const auto& c : all_cases(10))
      if (c.type.family == Family::D) cases.push_back(c);
    for (const auto& c : cases)
      for (auto& r : verify_case(c)) out.records.emplace(r.claim_id, std::move(r));
    out.seconds = seconds_since(t0);
    return out;
  }();
  return s;
}

void require_record(Outcome& out, const std::string& id) {
  const auto& records = sweep().records;
  const auto it = records.find(id);
  if (it == records.end()) {
    out.require(false, id + " missing");
    return;
  }
  const ClaimRecord& r = it->second;
  out.require(r.status == ClaimStatus::Pass, id + ": expected " + r.expected + ", computed " + r.computed);
}

Outcome root_lists() {
  Outcome out;
  for (const auto& id : kExceptional) {
    require_record(out, id + ".generators");
    require_record(out, id + ".roots");
  }
  out.summary = "7 cases, generators and non-simple q-roots";
  return out;
}

Outcome decompositions() {
  Outcome out;
  for (const auto& id : kExceptional) require_record(out, id + ".decomposition");
  out.summary = "7 cases";
  return out;
}

Outcome orbit_counts() {
  Outcome out;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6", "D4",
                           "D5", "D6", "D7", "G2", "F4", "E6", "E7", "E8"}) {
    const RootSystem rs = rs_of(name);
    const OrbitCount c = orbit_count_regular(rs);
    out.require(!c.refused && c.stable && c.count == (1LL << rs.rank()),
                std::string(name) + " regular count " + str(c.count));
  }
  for (const auto& id : {"E6.o7", "E7.o11", "E7.o13", "E8.o16", "E8.o17"}) {
    require_record(out, std::string(id) + ".orbits");
    require_record(out, std::string(id) + ".bound");
  }
  int d_cases = 0;
  for (const auto& [id, r] : sweep().records)
    if (id[0] == 'D' && (id.ends_with(".orbits") || id.ends_with(".bound"))) {
      require_record(out, id);
      ++d_cases;
    }
  out.require(d_cases > 0, "no D_n records");
  out.summary = "24 regular types, 5 exceptional cases, " + str(d_cases) + " D_n records";
  return out;
}

Outcome hecke_identities() {
  Outcome out;
  auto take = [&](const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks) out.require(c.pass, c.name + " [" + c.detail + "]");
  };
  int count = 0;
  for (const char* name : {"A2", "B2", "G2"}) {
    const auto checks = verify_bernstein(rs_of(name), 2);
    count += static_cast<int>(checks.size());
    for (const auto& c : checks) out.require(c.pass, std::string(name) + " " + c.name + " [" + c.detail + "]");
  }
  take(verify_theta_alpha_formula(rs_of("A2")));
  take(verify_type_a_lengths(6));
  take(verify_translation_words());
  using S = Scalar;
  for (int n = 1; n <= 6; ++n) {
    const auto c = one_dim_character(rs_of("A" + str(n)), std::vector<S>(static_cast<size_t>(n + 1), S::Q));
    out.require(c.exponent == std::vector<int>(static_cast<size_t>(n), 1) &&
                    c.sign == std::vector<int>(static_cast<size_t>(n), 1),
                "A" + str(n) + " all-q character");
  }
  const auto f4 = one_dim_character(rs_of("F4"), {S::MinusOne, S::Q, S::Q, S::MinusOne, S::MinusOne});
  out.require(f4.exponent == std::vector<int>{1, 1, -1, -1}, "F4 mixed character exponents");
  const auto g2 = one_dim_character(rs_of("G2"), {S::Q, S::Q, S::MinusOne});
  out.require(g2.exponent == std::vector<int>{1, -1}, "G2 mixed character exponents");
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) take(build_d_dprime(rs_of(name)).checks);
  out.summary = str(count) + " Bernstein checks on the radius-2 ball, words, lengths, characters, D/D'";
  return out;
}

Outcome torus_lemmas() {
  Outcome out;
  auto lemma = [&](const std::string& name, const std::vector<int>& orders) {
    const RootSystem rs = rs_of(name);
    for (int m : orders) {
      const Lemma32Result r = verify_lemma32(rs, QOrder::finite(m));
      out.require(r.applicable && !r.conjugate, name + " o" + str(m) + " conjugate");
    }
  };
  int lemma_cases = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto orders = valid_orders(rs_of("B" + str(n)));
    for (int m : orders) out.require(m % 2 == 1, "B" + str(n) + " has even valid order " + str(m));
    lemma("B" + str(n), orders);
    lemma_cases += static_cast<int>(orders.size());
  }
  lemma("F4", {5, 7, 9, 10, 11});
  lemma("G2", {4, 5});
  lemma_cases += 7;
  for (const char* name : {"B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6", "F4", "G2"}) {
    const RootSystem rs = rs_of(name);
    const long long z = rs.center_order();
    const auto q1 = count_one_dim_characters(rs, QOrder::finite(1));
    out.require(!q1.refused && q1.count == z, std::string(name) + " q = 1 count " + str(q1.count));
    for (int m : valid_orders(rs)) {
      const auto c = count_one_dim_characters(rs, QOrder::finite(m));
      out.require(!c.refused && c.count == 2 * z, std::string(name) + " o" + str(m) + " count " + str(c.count));
    }
  }
  out.summary = str(lemma_cases) + " non-conjugacy cases, 11 types of central characters";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Irr(W0) counts", 120, irr_counts},
      {2, "partition suite", 60, partition_suite},
      {3, "valid-order lists", 60, valid_order_lists},
      {4, "root-list golden tests", 300, root_lists},
      {5, "submodule decompositions", 300, decompositions},
      {6, "orbit counts", 300, orbit_counts},
      {7, "Hecke identities at rank 2", 120, hecke_identities},
      {8, "non-conjugacy and central characters", 120, torus_lemmas},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    double elapsed = seconds_since(t0);
    if (c.id == 4) elapsed -= sweep().seconds;
    if (c.id == 6) elapsed += sweep().seconds;
    o.require(elapsed < c.limit, "runtime " + str(elapsed) + " s over the " + str(c.limit) + " s limit");
    if (!o.pass) ++failed;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed;
    std::cout.precision(1);
    std::cout << elapsed << " s, limit " << c.limit << " s; " << o.summary << ")\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
