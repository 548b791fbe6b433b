#include "hk/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <thread>

#include "hk/counting.hpp"
#include "hk/fixtures.hpp"
#include "hk/mf.hpp"
#include "hk/word.hpp"

namespace hk {

size_t default_cap() {
  if (const char* env = std::getenv("HK_CAP")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 200000;
}

DirectedGraph JobConfig::load() const {
  if (!graph_file.empty() && !builder.empty())
    raise(Errc::input, "give exactly one graph source (--graph or --builder)");
  if (!graph_file.empty()) return load_graph(graph_file);
  if (!builder.empty()) return build_graph_expr(builder);
  raise(Errc::input, "a graph source is required (--graph or --builder)");
}

namespace {

int resolve_vertex(const DirectedGraph& g, const std::string& token) {
  int v = g.vertex_by_label(token);
  if (v >= 0) return v;
  char* end = nullptr;
  long idx = std::strtol(token.c_str(), &end, 10);
  if (end && *end == '\0' && idx >= 0 && idx < g.size())
    return static_cast<int>(idx);
  raise(Errc::input, "unknown vertex `" + token + "`");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

RewriteSystem JobConfig::system_for(const DirectedGraph& g) const {
  std::vector<int> order;
  if (priority.empty()) {
    order = default_priority(g);
  } else {
    for (const std::string& token : split(priority, ','))
      order.push_back(resolve_vertex(g, token));
  }
  RewriteSystem rs = complete_presentation(relations_of(g), order, limits);
  if (!rs.complete())
    raise(Errc::limit_exceeded,
          "completion hit its limits (" + std::to_string(limits.max_rules) +
              " rules / length " + std::to_string(limits.max_rule_len) +
              "); raise them or fall back to the oracle");
  return rs;
}

WeightFunction JobConfig::weights_for(const DirectedGraph& g,
                                      long fallback) const {
  WeightFunction f;
  if (!weights.empty()) {
    for (const std::string& token : split(weights, ',')) {
      size_t gt = token.find('>');
      size_t eq = token.find('=', gt == std::string::npos ? 0 : gt);
      if (gt == std::string::npos || eq == std::string::npos)
        raise(Errc::input, "weight entries look like `u>v=value`: " + token);
      int u = resolve_vertex(g, token.substr(0, gt));
      int v = resolve_vertex(g, token.substr(gt + 1, eq - gt - 1));
      f.set(u, v, BigInt(token.substr(eq + 1)));
    }
  } else {
    f = WeightFunction::constant(g, weights_const_set ? weights_const : fallback);
  }
  f.set_allow_zero(allow_zero);
  f.validate(g);
  return f;
}

namespace {

// Runs count independent tasks on up to `jobs` threads; results come back
// in task order regardless of scheduling.
std::vector<CountReport> run_reports(
    int jobs, int count, const std::function<CountReport(int)>& task) {
  std::vector<CountReport> out(count);
  int threads = std::max(1, std::min(jobs, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) out[i] = task(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) out[i] = task(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

int print_reports(const std::vector<CountReport>& reports, bool machine,
                  std::ostream& out) {
  bool all = true;
  for (const CountReport& r : reports) {
    if (machine) {
      out << r.machine_line() << "\n";
    } else {
      out << r.graph << ": formula=" << r.formula_value.get_str()
          << " enumerated=" << r.enumerated_value.get_str() << " "
          << (r.match ? "MATCH" : "MISMATCH") << "\n";
    }
    all = all && r.match;
  }
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int cmd_enumerate(const JobConfig& cfg, std::ostream& out) {
  try {
    DirectedGraph g = cfg.load();
    RewriteSystem rs = cfg.system_for(g);
    ElementTable t = enumerate_elements(rs, g, cfg.cap);
    if (cfg.machine()) {
      out << export_table(g, t);
    } else {
      out << t.size() << " elements\n";
      for (const Word& w : t.normal_forms) out << format_word(g, w) << "\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int cmd_verify(const JobConfig& cfg, const std::string& suite,
               std::ostream& out) {
  try {
    std::vector<CountReport> reports;
    bool extra_ok = true;

    if (suite == "catalan") {
      reports = run_reports(cfg.jobs, cfg.max_n, [&](int i) {
        int n = i + 1;
        DirectedGraph g = chain_graph(n);
        ElementTable t = enumerate_elements(cfg.system_for(g), g, cfg.cap);
        CountReport r = cardinality_formula(g, t);
        r.graph = "chain" + std::to_string(n);
        return r;
      });
    } else if (suite == "fibonacci") {
      reports = run_reports(cfg.jobs, cfg.max_n + 1, [&](int n) {
        CountReport r = alternating_cardinality_check(n, cfg.cap);
        r.graph = "alt" + std::to_string(n);
        return r;
      });
      for (size_t n = 2; n < reports.size(); ++n) {
        if (reports[n].enumerated_value !=
            3 * reports[n - 1].enumerated_value - reports[n - 2].enumerated_value)
          extra_ok = false;
      }
      out << "recursion f(n+1)=3f(n)-f(n-1): " << (extra_ok ? "ok" : "violated")
          << "\n";
    } else if (suite == "formula" || suite == "product" || suite == "mf") {
      auto one = [&](const DirectedGraph& g, const std::string& name) {
        RewriteSystem rs = cfg.system_for(g);
        ElementTable t = enumerate_elements(rs, g, cfg.cap);
        CountReport r = suite == "formula" ? cardinality_formula(g, t)
                        : suite == "product"
                            ? maximal_content_count(g, t)
                            : multiplicity_free_count(g, rs, t);
        r.graph = name;
        return r;
      };
      if (!cfg.graph_file.empty() || !cfg.builder.empty()) {
        DirectedGraph g = cfg.load();
        reports.push_back(one(g, g.description()));
      } else {
        // Default family: chains and alternating paths; --all-orientations
        // widens the sweep to every orientation of the path.
        struct Item {
          std::string name;
          DirectedGraph graph;
        };
        std::vector<Item> items;
        for (int n = 1; n <= cfg.max_n; ++n) {
          if (cfg.all_orientations) {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask)
              items.push_back(
                  {"orient" + std::to_string(n) + "m" + std::to_string(mask),
                   an_orientation(n, mask)});
          } else {
            items.push_back({"chain" + std::to_string(n), chain_graph(n)});
            if (n >= 2)
              items.push_back({"alt" + std::to_string(n), alternating_graph(n)});
          }
        }
        reports = run_reports(
            cfg.jobs, static_cast<int>(items.size()),
            [&](int i) { return one(items[i].graph, items[i].name); });
      }
    } else if (suite == "idempotents") {
      if (!cfg.graph_file.empty() || !cfg.builder.empty()) {
        DirectedGraph g = cfg.load();
        if (has_oriented_cycle(g, VertexSet::all(g.size()))) {
          CountReport r = idempotent_count_via_subgraphs(g, cfg.cap);
          r.graph = g.description();
          reports.push_back(r);
        } else {
          ElementTable t = enumerate_elements(cfg.system_for(g), g, cfg.cap);
          reports.push_back(idempotent_count(g, t));
        }
      } else {
        std::vector<NamedGraph> fixtures = acyclic_fixtures();
        reports = run_reports(
            cfg.jobs, static_cast<int>(fixtures.size()), [&](int i) {
              const auto& [name, g] = fixtures[i];
              ElementTable t = enumerate_elements(cfg.system_for(g), g, cfg.cap);
              CountReport r = idempotent_count(g, t);
              r.graph = name;
              return r;
            });
        CountReport tri = idempotent_count_via_subgraphs(triangle_graph(), cfg.cap);
        tri.graph = "triangle";
        reports.push_back(tri);
      }
    } else if (suite == "reversal") {
      std::vector<ReversalFixture> fixtures = reversal_fixtures();
      reports = run_reports(
          cfg.jobs, static_cast<int>(fixtures.size()), [&](int i) {
            const ReversalFixture& fx = fixtures[i];
            CountReport r =
                reversal_inequality_check(fx.graph, fx.piece2, fx.glue, cfg.cap);
            r.graph = fx.name;
            return r;
          });
    } else {
      raise(Errc::input, "unknown verify suite: " + suite);
    }

    int code = print_reports(reports, cfg.machine(), out);
    if (!cfg.machine() && reports.size() == 1)
      for (const std::string& line : reports.front().breakdown)
        out << "  " << line << "\n";
    return extra_ok ? code : kExitMismatch;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int cmd_rep(const JobConfig& cfg, const std::string& action, std::ostream& out) {
  try {
    if (action == "matrix") {
      DirectedGraph g = cfg.load();
      WeightFunction f = cfg.weights_for(g);
      out << represent(g, f, parse_word(g, cfg.word)).dump();
      return kExitOk;
    }
    if (action == "check-effective") {
      DirectedGraph g = cfg.load();
      WeightFunction f = cfg.weights_for(g);
      if (!check_well_defined(g, f)) {
        out << "well_defined=false\n";
        return kExitMismatch;
      }
      ElementTable t = enumerate_elements(cfg.system_for(g), g, cfg.cap);
      EffectivenessResult r = check_effective(g, f, t);
      out << "elements=" << t.size() << " effective="
          << (r.effective ? "true" : "false") << "\n";
      if (r.collision)
        out << "collision: [" << format_word(g, t.normal_forms[r.collision->first])
            << "] = [" << format_word(g, t.normal_forms[r.collision->second])
            << "]\n";
      return r.effective ? kExitOk : kExitMismatch;
    }
    if (action == "check-zn") {
      if (cfg.n < 4) raise(Errc::too_small, "--n must be at least 4");
      ZGraph z = build_zn(cfg.n);
      WeightFunction custom;
      const WeightFunction* override_f = nullptr;
      if (!cfg.weights.empty() || cfg.weights_const_set) {
        custom = cfg.weights_for(z.graph);
        override_f = &custom;
      }
      ZnCheckResult r = zn_representation_check(cfg.n, override_f, cfg.cap);
      out << "elements=" << r.element_count
          << " effective=" << (r.effective ? "true" : "false")
          << " taxonomy=" << (r.taxonomy_exact ? "exact" : "violated")
          << " types=";
      for (size_t i = 0; i < r.type_counts.size(); ++i)
        out << (i ? "," : "") << r.type_counts[i];
      out << "\n";
      return r.effective && r.taxonomy_exact ? kExitOk : kExitMismatch;
    }
    if (action == "check-cycle") {
      DirectedGraph g = cfg.load();
      WeightFunction f = cfg.weights_for(g, 2);
      CyclePowerResult r = check_cycle_powers(g, f, parse_word(g, cfg.word),
                                              cfg.kmax);
      out << "powers_distinct=" << (r.ok ? "true" : "false") << " exponents=";
      for (size_t i = 0; i < r.exponents.size(); ++i)
        out << (i ? "," : "") << r.exponents[i];
      out << "\n";
      return r.ok ? kExitOk : kExitMismatch;
    }
    raise(Errc::input, "unknown rep action: " + action);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int cmd_reduce(const JobConfig& cfg, std::ostream& out) {
  try {
    DirectedGraph g = cfg.load();
    RewriteSystem rs = cfg.system_for(g);
    Word w = parse_word(g, cfg.word);

    out << "normal_form=" << format_word(g, rs.normal_form(w)) << "\n";
    out << "mf_reduced=" << format_word(g, mf_reduce(g, w, sources_and_sinks(g)))
        << "\n";
    out << "content={";
    std::vector<int> vs = content(w).to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
      out << (i ? "," : "") << g.label(vs[i]);
    out << "}\n";

    if (is_type_an(g)) {
      try {
        out << "phi=" << format_word(g, mf_normal_form(g, rs, w)) << "\n";
      } catch (const Error& e) {
        if (e.code() != Errc::not_multiplicity_free) throw;
        out << "phi=n/a (element is not multiplicity free)\n";
      }
    } else {
      out << "phi=n/a (graph is not of type A_n)\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace hk
