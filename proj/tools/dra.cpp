#include <iostream>

#include "CLI11.hpp"
#include "dra/center.hpp"
#include "dra/expr.hpp"
#include "dra/relations.hpp"
#include "dra/sltable.hpp"
#include "dra/symmetry.hpp"

using namespace dra;

namespace {

struct CommonOpts {
  int n = 3;
  std::string order = "default";
  std::string backend = "rewrite";
  std::string format = "text";
  std::string vars = "theta";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_n = true) {
  if (with_n) cmd->add_option("--n", o.n, "rank of gl_n");
  cmd->add_option("--order", o.order, "default | stord | @file");
  cmd->add_option("--backend", o.backend, "oracle | rewrite");
  cmd->add_option("--format", o.format, "text | json | latex");
  cmd->add_option("--vars", o.vars, "theta | h");
}

ContextPtr make_ctx(const CommonOpts& o) {
  return AlgebraContext::make(order_from_spec(o.order, o.n));
}

VarStyle style_of(const CommonOpts& o) {
  if (o.vars == "theta") return VarStyle::Theta;
  if (o.vars == "h") return VarStyle::H;
  throw Error("unknown variable style: " + o.vars);
}

void print_element(const ZEl& x, const CommonOpts& o) {
  if (o.format == "json") std::cout << to_json(x) << "\n";
  else if (o.format == "latex") std::cout << to_latex(x, style_of(o)) << "\n";
  else std::cout << to_text(x, style_of(o)) << "\n";
}

GeneratorId parse_gen_token(const std::string& tok) {
  int i = 0, j = 0;
  if (std::sscanf(tok.c_str(), "z[%d,%d]", &i, &j) == 2) return {i, j};
  if (std::sscanf(tok.c_str(), "t[%d]", &i) == 1) return {i, i};
  if (std::sscanf(tok.c_str(), "%d,%d", &i, &j) == 2) return {i, j};
  throw Error("cannot parse generator '" + tok + "'");
}

std::pair<GeneratorId, GeneratorId> parse_pair(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos) throw Error("--pair expects 'a,b;c,d'");
  return {parse_gen_token(s.substr(0, semi)), parse_gen_token(s.substr(semi + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the diagonal reduction algebras of gl_n"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* order_cmd = app.add_subcommand("order", "print the active generator order");
  add_common(order_cmd, o);

  std::string expr_src;
  auto* mul_cmd = app.add_subcommand("mul", "multiply and normal-order an expression");
  add_common(mul_cmd, o);
  mul_cmd->add_option("expr", expr_src, "expression")->required();

  auto* no_cmd = app.add_subcommand("normal-order", "canonical ordered form of an expression");
  add_common(no_cmd, o);
  no_cmd->add_option("expr", expr_src, "expression")->required();

  std::string family = "all";
  int jobs = 1;
  auto* verify_cmd = app.add_subcommand("verify", "verify the defining relation families");
  add_common(verify_cmd, o);
  verify_cmd->add_option("--family", family, "all | 1 | 2 | 3a | 3ac | 3b | 4a | 4b");
  verify_cmd->add_option("--jobs", jobs, "worker threads");

  int q_index = 0;
  std::string braid_word;
  auto* q_cmd = app.add_subcommand("q", "apply Zhelobenko generators");
  add_common(q_cmd, o);
  q_cmd->add_option("--i", q_index, "single generator index");
  q_cmd->add_option("--word", braid_word, "braid word, comma-separated signed indices");
  q_cmd->add_option("expr", expr_src, "expression")->required();

  std::string which = "linear_t";
  bool check_central = false;
  auto* cas_cmd = app.add_subcommand("casimir", "central elements of the catalog");
  add_common(cas_cmd, o);
  cas_cmd->add_option("--which", which,
                      "linear_h | linear_t | quadratic | sl_linear | sl3_C1 | sl3_C2 | sl2_C1 | sl2_C2");
  cas_cmd->add_flag("--check", check_central, "also verify centrality");

  int cut_n = 2, cut_m = 1;
  auto* cut_cmd = app.add_subcommand("cut", "project Z_{n+m} onto U(h).(Z_n x Z_m)");
  cut_cmd->add_option("--n", cut_n, "first block")->required();
  cut_cmd->add_option("--m", cut_m, "second block")->required();
  cut_cmd->add_option("--backend", o.backend, "oracle | rewrite");
  cut_cmd->add_option("--format", o.format, "text | json | latex");
  cut_cmd->add_option("--vars", o.vars, "theta | h");
  cut_cmd->add_option("expr", expr_src, "expression in Z_{n+m}")->required();

  std::string target = "sl3";
  auto* table_cmd = app.add_subcommand("table", "regenerate the ordering-relation tables");
  table_cmd->add_option("--target", target, "sl2 | sl3 | gl2 | gl3");
  table_cmd->add_option("--order", o.order, "default | stord (gl targets)");
  table_cmd->add_option("--backend", o.backend, "oracle | rewrite");
  table_cmd->add_option("--format", o.format, "text | json | latex");
  table_cmd->add_option("--vars", o.vars, "theta | h");

  std::string pair_spec;
  auto* sc_cmd = app.add_subcommand("sc", "structure-table entry of a generator pair");
  add_common(sc_cmd, o);
  sc_cmd->add_option("--pair", pair_spec, "a,b;c,d")->required();

  std::string ray_spec = "2,3,5";
  auto* limit_cmd = app.add_subcommand("limit", "commutative-limit check for a pair");
  add_common(limit_cmd, o);
  limit_cmd->add_option("--pair", pair_spec, "a,b;c,d")->required();
  limit_cmd->add_option("--ray", ray_spec, "c_1,...,c_n");

  CLI11_PARSE(app, argc, argv);

  try {
    if (order_cmd->parsed()) {
      auto ctx = make_ctx(o);
      for (GeneratorId g : ctx->order().sequence()) std::cout << to_string(g) << "\n";
      return 0;
    }
    if (mul_cmd->parsed() || no_cmd->parsed()) {
      auto ctx = make_ctx(o);
      ZEl x = parse_expression(expr_src, *ctx, backend_from_string(o.backend));
      print_element(x, o);
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto ctx = make_ctx(o);
      std::vector<std::string> fams =
          family == "all" ? relation_family_tags() : std::vector<std::string>{family};
      bool all_ok = true;
      for (const auto& fam : fams) {
        auto rep = verify_relations(*ctx, {fam}, backend_from_string(o.backend), jobs);
        all_ok = all_ok && rep.ok();
        if (o.format == "json") {
          // one record per instance: {family, indices, residual_zero, residual}
          auto ids = enumerate_relations(ctx->n(), fam);
          for (const auto& id : ids) {
            const VerifyResult* fail = nullptr;
            for (const auto& f : rep.failures)
              if (f.id.family == id.family && f.id.line == id.line && f.id.idx == id.idx)
                fail = &f;
            std::cout << "{\"family\": \"" << id.family << "\", \"indices\": [";
            for (size_t k = 0; k < id.idx.size(); ++k)
              std::cout << (k ? "," : "") << id.idx[k];
            std::cout << "], \"residual_zero\": " << (fail ? "false" : "true")
                      << ", \"residual\": "
                      << to_json(fail ? fail->residual : ZEl::zero(ctx->n())) << "}\n";
          }
        } else {
          std::cout << "family " << fam << ": " << rep.total << " instances, "
                    << (rep.ok() ? "all residuals zero" : "FAILURES") << "\n";
          for (const auto& f : rep.failures)
            std::cout << "  " << to_string(f.id) << " residual " << to_text(f.residual) << "\n";
        }
      }
      return all_ok ? 0 : 1;
    }
    if (q_cmd->parsed()) {
      auto ctx = make_ctx(o);
      ZEl x = parse_expression(expr_src, *ctx, backend_from_string(o.backend));
      if (!braid_word.empty())
        x = braid_apply(*ctx, BraidWord::parse(braid_word), x, backend_from_string(o.backend));
      else if (q_index > 0)
        x = zhelobenko_fast(*ctx, q_index, x, backend_from_string(o.backend));
      else if (q_index < 0)
        x = zhelobenko_inverse(*ctx, -q_index, x, backend_from_string(o.backend));
      else
        throw Error("q needs --i or --word");
      print_element(x, o);
      return 0;
    }
    if (cas_cmd->parsed()) {
      auto ctx = make_ctx(o);
      ZEl c = central_element(*ctx, casimir_from_string(which), backend_from_string(o.backend));
      print_element(c, o);
      if (check_central) {
        bool ok = is_central(*ctx, c, backend_from_string(o.backend));
        std::cout << (ok ? "central: yes" : "central: NO") << "\n";
        return ok ? 0 : 1;
      }
      return 0;
    }
    if (cut_cmd->parsed()) {
      auto split = BlockSplit::make(cut_n, cut_m);
      ZEl x = parse_expression(expr_src, *split.full, backend_from_string(o.backend));
      print_element(cut_pi(split, x), o);
      return 0;
    }
    if (table_cmd->parsed()) {
      if (target == "sl2" || target == "sl3") {
        auto table = emit_sl_table(target == "sl2" ? 2 : 3, backend_from_string(o.backend));
        std::cout << sl_table_to_text(table, o.vars != "theta");
        return 0;
      }
      if (target == "gl2" || target == "gl3") {
        int n = target == "gl2" ? 2 : 3;
        auto ctx = AlgebraContext::make(order_from_spec(o.order, n));
        auto gens = ctx->order().sequence();
        for (auto it1 = gens.rbegin(); it1 != gens.rend(); ++it1)
          for (auto it2 = it1 + 1; it2 != gens.rend(); ++it2) {
            ZEl entry = ctx->structure_entry(*it1, *it2);
            std::cout << to_string(*it1) << " * " << to_string(*it2) << " = "
                      << to_text(entry, style_of(o)) << "\n";
          }
        return 0;
      }
      throw Error("unsupported table target: " + target);
    }
    if (sc_cmd->parsed()) {
      auto ctx = make_ctx(o);
      auto [g1, g2] = parse_pair(pair_spec);
      ZEl entry = ctx->structure_entry(g1, g2);
      if (o.format == "json") std::cout << to_json(entry) << "\n";
      else
        std::cout << to_string(g1) << " * " << to_string(g2) << " = "
                  << to_text(entry, style_of(o)) << "\n";
      return 0;
    }
    if (limit_cmd->parsed()) {
      auto ctx = make_ctx(o);
      auto [g1, g2] = parse_pair(pair_spec);
      std::vector<Rat> ray;
      std::stringstream ss(ray_spec);
      std::string tok;
      while (std::getline(ss, tok, ',')) ray.push_back(rat_from_string(tok));
      auto rep = homogeneous_limit_check(*ctx, g1, g2, ray);
      for (const auto& e : rep.entries) {
        std::cout << (e.is_swap ? "swap " : "     ");
        for (auto g : e.word) std::cout << to_string(g);
        std::cout << "  degree difference " << e.degree_difference << ", leading ratio "
                  << rat_to_string(e.leading_ratio) << "\n";
      }
      std::cout << (rep.ok ? "limit: commutative" : "limit: FAILED") << "\n";
      return rep.ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
