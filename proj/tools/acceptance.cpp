// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckeo/block/rank_one.hpp"
#include "heckeo/cli/app.hpp"
#include "heckeo/hecke/hecke_algebra.hpp"
#include "heckeo/hecke/kl_oracle.hpp"
#include "heckeo/k0/k0_class.hpp"

using namespace heckeo;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string note;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) note = what;
    pass = false;
  }
  void require(const CheckResult& r, const std::string& where) {
    require(r.pass, r.name + " " + where + ": " + r.detail);
  }
};

std::shared_ptr<HeckeAlgebra> algebra(const std::string& type) {
  return std::make_shared<HeckeAlgebra>(WeylGroup::build(CartanDatum::parse(type)));
}

CheckResult named(const std::vector<CheckResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  return {name, false, "check not found"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget_s;  // 0: no time limit
    std::function<Outcome()> body;
  };

  std::vector<Criterion> criteria = {
      {1, "Hecke quadratic and braid relations in A1 A2 A3 B2 G2", 10,
       [] {
         Outcome o;
         for (const char* t : {"A1", "A2", "A3", "B2", "G2"}) o.require(verify_relations(*algebra(t)), t);
         return o;
       }},
      {2, "KL recursion agrees with the bar-invariance solver in A3 and B2", 60,
       [] {
         Outcome o;
         for (const char* t : {"A3", "B2"}) {
           auto alg = algebra(t);
           auto r = verify_kl_oracle(*alg);
           o.require(r, t);
           o.require(r.detail.find(std::to_string(alg->group().order()) + " cases") == 0, std::string("not every element checked in ") + t);
         }
         return o;
       }},
      {3, "H_w0 C_x = Q_w0x in A1 A2 A3 B2", 0,
       [] {
         Outcome o;
         for (const char* t : {"A1", "A2", "A3", "B2"}) o.require(algebra(t)->verify_hw0_identity(), t);
         return o;
       }},
      {4, "Bott Euler form in A2 A3; Ext^i(Δ_e, L_s) only at i = 1", 0,
       [] {
         Outcome o;
         for (const char* t : {"A2", "A3"}) o.require(K0Model(algebra(t)).verify_bott(), t);
         auto b = build_rank_one();
         auto ext = ext_dims(b->algebra(), b->module("Δ_e"), b->module("L_s"));
         o.require(ext == std::vector<std::size_t>{0, 1}, "Ext^*(Δ_e, L_s) is not [0,1]");
         o.require(b->verify_bott_ext(), "block");
         return o;
       }},
      {5, "Weyl character formula at v = 1 in A2 A3", 0,
       [] {
         Outcome o;
         for (const char* t : {"A2", "A3"}) o.require(named(K0Model(algebra(t)).verify_characters(), "k0.weyl_character"), t);
         return o;
       }},
      {6, "tilting character formula and positivity in A2 A3 B2", 0,
       [] {
         Outcome o;
         for (const char* t : {"A2", "A3", "B2"}) {
           auto rs = K0Model(algebra(t)).verify_characters();
           o.require(named(rs, "k0.tilting_character"), t);
           o.require(named(rs, "k0.positivity"), t);
         }
         return o;
       }},
      {7, "rank-one block: triangle identities, ev/coev quasi-isomorphisms, Θ*D = P, transpose laws", 5,
       [] {
         Outcome o;
         auto b = build_rank_one();
         o.require(b->verify_adjunctions(), "");
         o.require(b->verify_derived_equivalence(), "");
         o.require(b->verify_tilting_switch(), "");
         o.require(b->verify_transpose(), "");
         return o;
       }},
      {8, "A1 K0 answers at v = 1 match the rank-one block", 0,
       [] {
         Outcome o;
         o.require(build_rank_one()->verify_k0_consistency(), "");
         return o;
       }},
      {9, "verify --type A3 --suite all is byte-identical across runs", 0,
       [] {
         Outcome o;
         std::vector<std::string> args{"verify", "--type", "A3", "--suite", "all"};
         std::ostringstream out1, out2, err1, err2;
         int rc1 = cli::run(args, out1, err1, nullptr);
         int rc2 = cli::run(args, out2, err2, nullptr);
         o.require(rc1 == 0 && rc2 == 0, "exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));
         o.require(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
         o.require(out1.str().rfind("{\"schema\":1,", 0) == 0, "not a schema-1 JSON report");
         return o;
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.budget_s > 0 && s >= c.budget_s) o.require(false, "over the time budget");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", s);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.title << " (" << timing << ")";
    if (!o.pass) std::cout << ": " << o.note;
    std::cout << "\n";
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
