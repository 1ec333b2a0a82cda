#include "heckeo/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckeo/cli/config.hpp"
#include "heckeo/hecke/hecke_algebra.hpp"
#include "heckeo/hecke/kl_oracle.hpp"
#include "heckeo/k0/k0_class.hpp"

namespace heckeo::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Runs `f`, attributing its wall time to every check it returns.
void timed(VerificationReport& r, const std::function<std::vector<CheckResult>()>& f) {
  auto t0 = Clock::now();
  auto checks = f();
  double ms = ms_since(t0);
  for (auto& c : checks) r.checks.push_back({std::move(c), ms});
}

std::vector<CheckResult> one(CheckResult c) { return {std::move(c)}; }

struct Shared {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> cap;
  std::optional<std::size_t> width;
};

struct Resolved {
  Config config;
  GroupOptions group;
  EmitOptions emit;
};

Resolved resolve(const Shared& s, const char* env, bool timings) {
  Resolved r;
  r.config = resolve_config(s.config_path, env);
  if (s.cap) r.config.enumeration_cap = *s.cap;
  if (s.width) r.config.table_width = *s.width;
  r.group.max_order = r.config.enumeration_cap;
  r.emit.timings = timings;
  r.emit.table_width = r.config.table_width;
  return r;
}

Format pick_format(const std::optional<std::string>& flag, const Config& c) {
  return flag ? parse_format(*flag) : c.format;
}

// Commands with structured (non-report) output know json and table only;
// a csv default from the config falls back to json.
Format pick_plain_format(const std::optional<std::string>& flag, const Config& c) {
  if (flag) return parse_format(*flag);
  return c.format == Format::csv ? Format::json : c.format;
}

// Exponent -> coefficient, in increasing exponent order.
nlohmann::ordered_json poly_json(const LaurentPoly& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.fits_slong_p()) j[std::to_string(e)] = c.get_si();
    else j[std::to_string(e)] = c.get_str();
  }
  return j;
}

std::shared_ptr<const WeylGroup> group_for(const std::string& type, const GroupOptions& opts) {
  return WeylGroup::build(CartanDatum::parse(type), opts);
}

}  // namespace

VerificationReport block_report(BlockSuite suite) {
  static const char* names[] = {"all", "adjunctions", "equivalence", "tilting"};
  VerificationReport r;
  r.suite = std::string("block-") + names[static_cast<int>(suite)];
  auto t0 = Clock::now();
  auto block = build_rank_one();
  double build_ms = ms_since(t0);
  // individual timings would need per-check calls; the suite is fast enough
  // that one shared figure is informative
  timed(r, [&] { return block->verify(suite); });
  for (auto& c : r.checks) c.elapsed_ms += build_ms;
  r.sort_checks();
  return r;
}

VerificationReport verify_suite(const std::string& suite, const std::string& type, const GroupOptions& options) {
  if (suite != "hecke" && suite != "k0" && suite != "block" && suite != "all")
    throw std::invalid_argument("unknown suite '" + suite + "' (expected hecke, k0, block, all)");
  VerificationReport r;
  r.suite = suite;
  if (suite != "block") {
    auto group = group_for(type, options);
    r.type = group->datum().name();
    auto alg = std::make_shared<HeckeAlgebra>(group);
    if (suite == "hecke" || suite == "all") {
      timed(r, [&] { return one(verify_relations(*alg)); });
      timed(r, [&] { return one(verify_kl_basis(*alg)); });
      timed(r, [&] { return one(verify_kl_oracle(*alg)); });
      timed(r, [&] { return one(alg->verify_hw0_identity()); });
    }
    if (suite == "k0" || suite == "all") {
      K0Model k0(alg);
      timed(r, [&] { return one(k0.verify_bott()); });
      timed(r, [&] { return k0.verify_characters(); });
      timed(r, [&] { return k0.verify_structure(); });
    }
  }
  if (suite == "block" || suite == "all") {
    auto b = block_report(BlockSuite::all);
    for (auto& c : b.checks) r.checks.push_back(std::move(c));
  }
  r.sort_checks();
  return r;
}

std::string homology_csv(const RankOneBlock& block) {
  std::string out = "functor,module,degree,dimension\n";
  for (const auto& row : block.homology_table())
    out += csv_escape(row.functor) + "," + csv_escape(row.module) + "," + std::to_string(row.degree) + "," + std::to_string(row.dimension) + "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* config_env) {
  CLI::App app{"Exact Hecke algebra, Kazhdan-Lusztig and category O computations", "heckeo"};
  app.require_subcommand(1);
  app.fallthrough();
  Shared shared;
  app.add_option("--config", shared.config_path, std::string("key=value config file (overrides $") + kConfigEnv + ")");
  app.add_option("--cap", shared.cap, "largest Weyl group order to enumerate");
  app.add_option("--width", shared.width, "table width for wrapped details");

  const std::vector<std::string> formats{"json", "csv", "table"};
  const std::vector<std::string> plain_formats{"json", "table"};

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl group data: summary (--info) or full export");
  std::string w_type;
  bool w_info = false;
  std::optional<std::string> w_format;
  weyl->add_option("--type", w_type, "Cartan type, e.g. A3, B2, G2")->required();
  weyl->add_flag("--info", w_info, "order, length of w0 and number of positive roots only");
  weyl->add_option("--format", w_format)->check(CLI::IsMember(plain_formats));

  // klpoly
  auto* kl = app.add_subcommand("klpoly", "coefficient of H_y in the KL basis element C_x");
  std::string k_type, k_x, k_y;
  std::optional<std::string> k_format;
  kl->add_option("--type", k_type)->required();
  kl->add_option("--x", k_x, "dot-separated reduced word, 'e' or 'w0'")->required();
  kl->add_option("--y", k_y)->required();
  kl->add_option("--format", k_format)->check(CLI::IsMember(plain_formats));

  // basis-change
  auto* bc = app.add_subcommand("basis-change", "express a basis class of K0 in another basis");
  std::string b_type, b_from, b_to, b_x;
  std::optional<std::string> b_format;
  bc->add_option("--type", b_type)->required();
  bc->add_option("--from", b_from, "Verma, DualVerma, Simple, Projective, Tilting")->required();
  bc->add_option("--to", b_to)->required();
  bc->add_option("--x", b_x)->required();
  bc->add_option("--format", b_format)->check(CLI::IsMember(plain_formats));

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::optional<std::string> v_type;
  std::string v_suite = "all";
  std::optional<std::string> v_format;
  bool v_timings = false;
  ver->add_option("--type", v_type);
  ver->add_option("--suite", v_suite)->check(CLI::IsMember({"hecke", "k0", "block", "all"}));
  ver->add_option("--format", v_format)->check(CLI::IsMember(formats));
  ver->add_flag("--timings", v_timings, "include elapsed milliseconds (makes output nondeterministic)");

  // block-check
  auto* blk = app.add_subcommand("block-check", "verify the rank-one block");
  std::string c_suite = "all";
  std::optional<std::string> c_format;
  bool c_timings = false, c_homology = false;
  blk->add_option("--suite", c_suite)->check(CLI::IsMember({"all", "adjunctions", "equivalence", "tilting"}));
  blk->add_option("--format", c_format)->check(CLI::IsMember(formats));
  blk->add_flag("--timings", c_timings);
  blk->add_flag("--homology", c_homology, "print homology dimensions of Θ*, Θ!, Θ*Θ!, Θ!Θ* as CSV instead");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (weyl->parsed()) {
      auto r = resolve(shared, config_env, false);
      auto g = group_for(w_type, r.group);
      Format f = pick_plain_format(w_format, r.config);
      if (w_info) {
        nlohmann::ordered_json j;
        j["type"] = g->datum().name();
        j["order"] = g->order();
        j["longest_length"] = g->length(g->longest());
        j["positive_roots"] = g->num_positive_roots();
        j["w0"] = g->word_string(g->longest());
        if (f == Format::json) out << j.dump() << "\n";
        else
          out << "type            " << g->datum().name() << "\norder           " << g->order() << "\nℓ(w0)           "
              << g->length(g->longest()) << "\npositive roots  " << g->num_positive_roots() << "\nw0              "
              << g->word_string(g->longest()) << "\n";
      } else if (f == Format::json) {
        out << g->to_json(true).dump() << "\n";
      } else {
        out << "id  length  word\n";
        for (auto x : g->elements()) out << x.id() << "  " << g->length(x) << "  " << g->word_string(x) << "\n";
      }
      return kOk;
    }
    if (kl->parsed()) {
      auto r = resolve(shared, config_env, false);
      auto alg = std::make_shared<HeckeAlgebra>(group_for(k_type, r.group));
      const auto& g = alg->group();
      WeylElt x = g.parse_word(k_x), y = g.parse_word(k_y);
      LaurentPoly c = alg->kl_element(x).coeff(y);
      if (pick_plain_format(k_format, r.config) == Format::json) {
        nlohmann::ordered_json j;
        j["x"] = g.word_string(x);
        j["y"] = g.word_string(y);
        j["coeff"] = poly_json(c);
        out << j.dump() << "\n";
      } else {
        out << "coefficient of H_" << g.word_string(y) << " in C_" << g.word_string(x) << ": " << c.to_string() << "\n";
      }
      return kOk;
    }
    if (bc->parsed()) {
      auto r = resolve(shared, config_env, false);
      auto alg = std::make_shared<HeckeAlgebra>(group_for(b_type, r.group));
      K0Model k0(alg);
      const auto& g = k0.group();
      BasisKind from = parse_basis_kind(b_from), to = parse_basis_kind(b_to);
      WeylElt x = g.parse_word(b_x);
      K0Class cls = k0.class_of(x, from);
      if (pick_plain_format(b_format, r.config) == Format::json) {
        nlohmann::ordered_json j;
        j["type"] = g.datum().name();
        j["x"] = g.word_string(x);
        j["from"] = heckeo::to_string(from);
        j["to"] = heckeo::to_string(to);
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
        auto c = k0.expand(cls, to);
        for (std::uint32_t id = 0; id < c.size(); ++id)
          if (!c[id].is_zero()) coeffs[g.word_string(g.element(id))] = poly_json(c[id]);
        j["coeffs"] = std::move(coeffs);
        out << j.dump() << "\n";
      } else {
        out << "[" << basis_symbol(from) << "_" << g.word_string(x) << "] = " << k0.format_in_basis(cls, to) << "\n";
      }
      return kOk;
    }
    if (ver->parsed()) {
      auto r = resolve(shared, config_env, v_timings);
      if (!v_type && v_suite != "block") {
        err << "usage error: verify --suite " << v_suite << " needs --type\n";
        return kUsage;
      }
      auto report = verify_suite(v_suite, v_type.value_or(""), r.group);
      out << emit(report, pick_format(v_format, r.config), r.emit);
      return report.pass() ? kOk : kCheckFailed;
    }
    if (blk->parsed()) {
      auto r = resolve(shared, config_env, c_timings);
      if (c_homology) {
        out << homology_csv(*build_rank_one());
        return kOk;
      }
      auto report = block_report(parse_block_suite(c_suite));
      out << emit(report, pick_format(c_format, r.config), r.emit);
      return report.pass() ? kOk : kCheckFailed;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: enumeration cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace heckeo::cli
