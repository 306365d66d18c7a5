#include "cuntz/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "cuntz/cli/expression.hpp"
#include "cuntz/cli/render.hpp"
#include "cuntz/constructions.hpp"
#include "cuntz/diagonal.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/serialize.hpp"
#include "cuntz/thompson.hpp"

namespace cuntz::cli {

namespace {

using nlohmann::json;

json coefficient_json(const Coefficient& c) {
  return {{"re", rational_string(c.re())}, {"im", rational_string(c.im())}};
}

json element_report(const Element& x) {
  return {{"element", to_json(x)}, {"text", print(x)}};
}

struct Emitter {
  std::ostream& out;
  bool pretty;

  void operator()(const json& j, const std::string& human) const {
    if (pretty) out << human << "\n";
    else out << j.dump() << "\n";
  }
  void element(const Element& x) const { (*this)(element_report(x), print(x)); }
};

struct RelationRow {
  std::string name;
  bool holds;
};

std::vector<RelationRow> presentation_relations(int max_index) {
  std::vector<RelationRow> rows;
  std::vector<Element> x;
  for (int k = 0; k <= max_index + 1; ++k) x.push_back(generator_x(k).to_element());
  for (int j = 1; j <= max_index; ++j)
    for (int i = 0; i < j; ++i)
      rows.push_back({"x" + std::to_string(j) + " x" + std::to_string(i) + " = x" +
                          std::to_string(i) + " x" + std::to_string(j + 1),
                      x[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(i)] ==
                          x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j + 1)]});
  const Element one = Element::one(2);
  const Element& a = x[0];
  const Element& b = x[1];
  const Element ai = a.adjoint(), bi = b.adjoint();
  auto commutator = [](const Element& g, const Element& h) {
    return g * h * g.adjoint() * h.adjoint();
  };
  rows.push_back({"[A B^-1, A^-1 B A] = 1", commutator(a * bi, ai * b * a) == one});
  rows.push_back({"[A B^-1, A^-2 B A^2] = 1",
                  commutator(a * bi, ai * ai * b * a * a) == one});
  for (int k = 1; k <= max_index; ++k) {
    const Element conj = ai.pow(static_cast<unsigned>(k - 1)) * b *
                         a.pow(static_cast<unsigned>(k - 1));
    rows.push_back({"x" + std::to_string(k) + " = A^-" + std::to_string(k - 1) +
                        " B A^" + std::to_string(k - 1),
                    conj == x[static_cast<std::size_t>(k)]});
  }
  return rows;
}

TableUnitary require_table(const Element& x) {
  if (x.alphabet() != 2) throw std::invalid_argument("tree pairs need n = 2");
  auto t = TableUnitary::try_from_element(x);
  if (!t) throw std::invalid_argument("expression is not an element of V: " + print(x));
  return *t;
}

json table_report(const TableUnitary& w) {
  json j = element_report(w.to_element());
  j["class"] = std::string(to_string(classify(w)));
  j["pairs"] = to_json(w);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact word calculus in the Cuntz algebras and Thompson's groups", "cuntz"};
  app.require_subcommand(1);
  int n = 2;
  bool pretty = false;
  app.add_option("--n", n, "alphabet size")->check(CLI::Range(2, 255));
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string expr, u_text, w_text, s1_text, s2_text, point, format, klass;
  std::string p_text, mu_text, nu_text, kappa_text, side = "nu", expect;
  int depth = 8, budget = 4, letter = 1, k = 1, max_index = 6, size = 4;
  std::uint64_t seed = 0;

  auto with_expr = [&](CLI::App* sub) {
    sub->add_option("expr", expr, "expression")->required();
    return sub;
  };

  auto* eval = with_expr(app.add_subcommand("eval", "evaluate to canonical form"));
  auto* cls = with_expr(app.add_subcommand("classify", "F / T / V membership"));
  cls->add_option("--expect", expect, "exit 1 unless the verdict is this class");
  auto* apply_cmd = with_expr(app.add_subcommand("apply", "apply lambda_u"));
  apply_cmd->add_option("--u", u_text, "unitary")->required();
  auto* compose = app.add_subcommand("compose", "unitary of lambda_u after lambda_w");
  compose->add_option("--u", u_text)->required();
  compose->add_option("--w", w_text)->required();
  auto* recover_cmd = app.add_subcommand("recover", "u = sum_i lambda_u(S_i) S_i^*");
  recover_cmd->add_option("--s1", s1_text)->required();
  recover_cmd->add_option("--s2", s2_text)->required();
  auto* phid = with_expr(app.add_subcommand("phid", "expectation onto the diagonal"));
  auto* phif = with_expr(app.add_subcommand("phif", "expectation onto the core"));
  auto* trace_cmd = with_expr(app.add_subcommand("trace", "normalized trace"));
  auto* minq = with_expr(app.add_subcommand("minq", "standard form and min length"));
  auto* onew = with_expr(app.add_subcommand("onew", "diagonal part of a table unitary"));
  auto* chr = with_expr(app.add_subcommand("char", "character at an eventually periodic point"));
  chr->add_option("--point", point, "head(cycle)")->required();
  auto* modscale = app.add_subcommand("modscale", "modest scaling probe");
  modscale->add_option("--u", u_text)->required();
  modscale->add_option("--depth", depth)->check(CLI::PositiveNumber);
  modscale->add_option("--budget", budget)->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "explicit element constructions");
  construct->require_subcommand(1);
  auto* c39 = construct->add_subcommand("remark39", "w in F with one_w = p");
  c39->add_option("--p", p_text)->required();
  auto* c311 = construct->add_subcommand("remark311", "w in V fixing mu, moving nu");
  c311->add_option("--mu", mu_text)->required();
  c311->add_option("--nu", nu_text)->required();
  auto* c35 = construct->add_subcommand("prop35", "non-modestly scaling unitary");
  c35->add_option("--i", letter)->required();
  c35->add_option("--k", k)->required();
  auto* c314 = construct->add_subcommand("lemma314", "w in F separating mu and nu");
  c314->add_option("--mu", mu_text)->required();
  c314->add_option("--nu", nu_text)->required();
  c314->add_option("--kappa", kappa_text)->required();
  c314->add_option("--side", side, "nu (nu is not 2...2) or mu (mu is not 1...1)")
      ->check(CLI::IsMember({"nu", "mu"}));

  auto* render = with_expr(app.add_subcommand("render", "tree pair or PL rendering"));
  render->add_option("--format", format)->required()->check(CLI::IsMember({"dot", "ascii", "pl"}));
  auto* relcheck = app.add_subcommand("relcheck", "check the presentations of F");
  relcheck->add_option("--max-index", max_index)->check(CLI::Range(1, 64));
  auto* random_cmd = app.add_subcommand("random", "random element of F, T or V");
  random_cmd->add_option("--class", klass)->required()->check(CLI::IsMember({"F", "T", "V"}));
  random_cmd->add_option("--size", size)->check(CLI::PositiveNumber);
  random_cmd->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  const Emitter emit{out, pretty};
  auto ev = [n](const std::string& text) { return evaluate(text, n); };

  try {
    if (*eval) {
      emit.element(ev(expr));
    } else if (*cls) {
      const ThompsonClass verdict = classify(ev(expr));
      emit({{"class", std::string(to_string(verdict))}}, std::string(to_string(verdict)));
      if (!expect.empty()) {
        auto wanted = parse_thompson_class(expect);
        if (!wanted) throw std::invalid_argument("unknown class '" + expect + "'");
        if (*wanted != verdict) return kNegative;
      }
    } else if (*apply_cmd) {
      emit.element(apply(Endo(ev(u_text)), ev(expr)));
    } else if (*compose) {
      emit.element(convolve(ev(u_text), ev(w_text)));
    } else if (*recover_cmd) {
      if (n != 2) throw std::invalid_argument("recover takes --s1 --s2, so n must be 2");
      const Element images[] = {ev(s1_text), ev(s2_text)};
      emit.element(recover(images));
    } else if (*phid) {
      emit.element(phi_d(ev(expr)));
    } else if (*phif) {
      emit.element(phi_f(ev(expr)));
    } else if (*trace_cmd) {
      const Coefficient t = trace(ev(expr));
      emit({{"trace", coefficient_json(t)}}, t.to_string());
    } else if (*minq) {
      const Element q = ev(expr);
      json form = json::array();
      std::string human;
      for (const auto& mu : standard_form(q)) {
        const std::string s = mu.empty() ? "e" : mu.to_string();
        form.push_back(mu.to_string());
        human += (human.empty() ? "" : " ") + s;
      }
      const std::size_t m = min_q(q);
      emit({{"min", m}, {"standard_form", form}},
           "min = " + std::to_string(m) + "  {" + human + "}");
    } else if (*onew) {
      emit.element(one_w(ev(expr)));
    } else if (*chr) {
      const PointSpec x = PointSpec::parse(n, point);
      const Coefficient v = char_eval(ev(expr), x);
      emit({{"point", x.to_string()}, {"value", coefficient_json(v)}}, v.to_string());
    } else if (*modscale) {
      const Endo e(ev(u_text));
      if (!diagonal_preservation_probe(e, depth).preserves()) {
        emit({{"error", "endomorphism does not preserve the diagonal to this depth"}},
             "endomorphism does not preserve the diagonal to this depth");
        return kNegative;
      }
      const ScalingReport report = modest_scaling_probe(e, depth, budget);
      std::string human = std::string(to_string(report.verdict));
      if (report.witness)
        human += "  kappa=" + report.witness->kappa.to_string() +
                 " mu=" + report.witness->mu.to_string() +
                 " nu=" + report.witness->nu.to_string();
      emit(to_json(report), human);
    } else if (*construct) {
      TableUnitary w;
      if (*c39) {
        w = unitary_fixing_projection(ev(p_text));
      } else if (*c311) {
        w = cylinder_swap(MultiIndex::parse(2, mu_text), MultiIndex::parse(2, nu_text));
      } else if (*c35) {
        w = TableUnitary::from_element(stalled_cylinder_unitary(letter, k));
      } else {
        const OrthTriple t{MultiIndex::parse(2, mu_text), MultiIndex::parse(2, kappa_text),
                           MultiIndex::parse(2, nu_text)};
        w = order_preserving_separator(
            t, side == "nu" ? SeparatorSide::NuNotAll2s : SeparatorSide::MuNotAll1s);
      }
      emit(table_report(w), print(w.to_element()));
    } else if (*render) {
      const TableUnitary w = require_table(ev(expr));
      if (format == "dot") out << render_dot(w);
      else if (format == "ascii") out << render_ascii(w);
      else out << render_pl(w) << "\n";
    } else if (*relcheck) {
      json rows = json::array();
      std::string human;
      bool all = true;
      for (const auto& row : presentation_relations(max_index)) {
        rows.push_back({{"relation", row.name}, {"holds", row.holds}});
        human += (row.holds ? "ok   " : "FAIL ") + row.name + "\n";
        all = all && row.holds;
      }
      emit({{"relations", rows}, {"all_hold", all}}, human + (all ? "all hold" : "FAILED"));
      if (!all) return kNegative;
    } else if (*random_cmd) {
      const TableUnitary w = random_table(*parse_thompson_class(klass), size, seed);
      emit(table_report(w), print(w.to_element()));
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kNegative;
  }
  return kSuccess;
}

}  // namespace cuntz::cli
