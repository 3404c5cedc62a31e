#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "roughdist/counting.hpp"
#include "roughdist/feasibility.hpp"
#include "roughdist/granular.hpp"
#include "roughdist/indices.hpp"
#include "roughdist/io.hpp"
#include "roughdist/poset.hpp"

using json = nlohmann::ordered_json;
using namespace roughdist;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;
constexpr int kIo = 4;

void emit(const json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string entry_line(const FeasibilityEntry& e) {
  std::string line = "k=" + e.k.str();
  if (e.pi) line += " pi=" + render_rational(*e.pi);
  line += " rough=" + e.rough_count.str();
  return line + "\n";
}

int run_feasible(const std::string& case_name, const Integer& n,
                 const std::string& alpha_text, const std::string& pi_text,
                 bool trimmed, bool as_json) {
  json j;
  j["case"] = case_name;
  j["n"] = n.str();
  if (case_name == "0") {
    auto k = case0_k(n);
    if (!k) {
      j["feasible"] = false;
      j["reason"] = "1+4n not a perfect square";
      emit(j, as_json, "infeasible: 1+4n not a perfect square\n");
      return kInfeasible;
    }
    j["feasible"] = true;
    j["k"] = k->str();
    j["rough"] = Integer(n - *k).str();
    emit(j, as_json, "k=" + k->str() + " rough=" + Integer(n - *k).str() + "\n");
    return kOk;
  }
  if (case_name == "1") {
    auto k = case1_k(n);
    if (!k) {
      j["feasible"] = false;
      j["reason"] = "n not a perfect square";
      emit(j, as_json, "infeasible: n not a perfect square\n");
      return kInfeasible;
    }
    j["feasible"] = true;
    j["k"] = k->str();
    j["rough"] = Integer(n - *k).str();
    emit(j, as_json, "k=" + k->str() + " rough=" + Integer(n - *k).str() + "\n");
    return kOk;
  }
  if (case_name == "1p") {
    auto models = case1_powerset_models(n);
    j["count"] = models.size();
    j["models"] = json::array();
    std::string text = "models=" + std::to_string(models.size()) + "\n";
    for (const auto& m : models) {
      j["models"].push_back({{"x", m.x}, {"k", m.k.str()}, {"n", m.n.str()}});
      text += "x=" + std::to_string(m.x) + " k=" + m.k.str() + " n=" + m.n.str() + "\n";
    }
    emit(j, as_json, text);
    return models.empty() ? kInfeasible : kOk;
  }
  // case 2
  if (!alpha_text.empty() && !pi_text.empty()) {
    std::cerr << "usage: give --alpha or --pi, not both\n";
    return kUsage;
  }
  if (!pi_text.empty()) {
    Rational pi = parse_rational(pi_text);
    auto ks = case2_k_from_pi(n, pi);
    Integer count = case2_count_values(n, pi, trimmed);
    j["pi"] = render_rational(pi);
    j["candidates"] = count.str();
    j["k"] = json::array();
    std::string text = "candidates=" + count.str() + "\n";
    for (const auto& k : ks) {
      j["k"].push_back(k.str());
      text += "k=" + k.str() + " rough=" + Integer(n - k).str() + "\n";
    }
    emit(j, as_json, text);
    return ks.empty() ? kInfeasible : kOk;
  }
  Rational alpha = alpha_text.empty() ? Rational(1) : parse_rational(alpha_text);
  auto report = case2_admissible_ks(n, alpha);
  const auto& entries = trimmed ? report.admissible_trimmed : report.admissible;
  j["alpha"] = render_rational(alpha);
  j["range"] = {{"k_min", report.k_min.str()}, {"k_max", report.k_max.str()}};
  j["candidates"] = report.candidate_count.str();
  j["admissible"] = json::array();
  std::string text = "candidates=" + report.candidate_count.str() + " range=[" +
                     report.k_min.str() + "," + report.k_max.str() + "]\n";
  for (const auto& e : entries) {
    j["admissible"].push_back(
        {{"k", e.k.str()}, {"pi", render_rational(*e.pi)}, {"rough", e.rough_count.str()}});
    text += entry_line(e);
  }
  if (entries.empty()) {
    j["reason"] = report.infeasible_reason;
    text += "infeasible: " + report.infeasible_reason + "\n";
  }
  emit(j, as_json, text);
  return entries.empty() ? kInfeasible : kOk;
}

int run_count(const Integer& r, std::size_t g, const Integer& lo, const Integer& hi,
              const std::string& cover_path, bool verify, bool as_json) {
  json j;
  std::string text;
  if (!cover_path.empty()) {
    auto p = parse_poset_file(cover_path);
    auto report = chain_cover_model_count(p, r);
    j["B"] = report.B.str();
    j["n_o"] = report.n_o.str();
    text = "n_o=" + report.n_o.str() + " B=" + report.B.str() + "\n";
    if (verify) {
      Integer oracle = placement_oracle_count(p, r.convert_to<std::size_t>());
      j["oracle"] = oracle.str();
      j["verified"] = (oracle == report.B);
      text += "oracle=" + oracle.str() + (oracle == report.B ? " ok" : " MISMATCH") + "\n";
      if (oracle != report.B) {
        emit(j, as_json, text);
        return kInfeasible;
      }
    }
    emit(j, as_json, text);
    return kOk;
  }
  auto report = bounded_model_count({r, g, lo, hi});
  if (report.lower > report.B || report.B > report.upper)
    throw std::logic_error("count bounds violated");
  j["n_o"] = report.n_o.str();
  j["B"] = report.B.str();
  j["bounds"] = {report.lower.str(), report.upper.str()};
  j["zero_parts_permitted"] = report.zero_parts_permitted;
  text = "n_o=" + report.n_o.str() + " B=" + report.B.str() + " bounds=[" +
         report.lower.str() + "," + report.upper.str() + "]";
  if (report.zero_parts_permitted) text += " zero-parts-permitted";
  text += "\n";
  emit(j, as_json, text);
  return kOk;
}

int run_index(const std::string& space_path, const std::string& convention, bool as_json) {
  auto g = parse_gos_file(space_path);
  auto conv = convention == "maximal" ? RoughConvention::MaximalClasses
                                      : RoughConvention::NonDefiniteSubsets;
  auto inst = build_framework(g, conv);
  std::vector<ApproximationPair> pairs;
  for (Subset x : inst.rough) pairs.push_back(inst.phi.at(x));
  auto idx = iota(pairs);
  std::ostringstream value;
  value.precision(15);
  value << idx.numeric();

  json j;
  j["n"] = inst.n;
  j["k"] = inst.k;
  j["rough"] = inst.rough.size();
  j["c0"] = idx.c0.str();
  j["c1"] = idx.c1.str();
  j["c_pi"] = idx.c_pi.str();
  j["c_e"] = idx.c_e.str();
  j["value"] = value.str();
  std::string text = idx.render() + " = " + value.str() + "\n";
  if (inst.n > inst.k) {
    auto rel = iota_star(idx, Integer(std::uint64_t(inst.n)), Integer(std::uint64_t(inst.k)));
    std::ostringstream rv;
    rv.precision(15);
    rv << rel.numeric();
    j["relative"] = rv.str();
    text += "relative=" + rv.str() + "\n";
  }
  emit(j, as_json, text);
  return kOk;
}

int run_poset(const std::string& path, bool do_validate, bool do_width, bool do_cover,
              bool do_sdr, bool as_json) {
  if (do_sdr) {
    // family file: "ground a b c" then "set a b" lines
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open " << path << "\n";
      return kIo;
    }
    std::map<std::string, std::size_t> index;
    SetFamily family;
    std::vector<std::string> names;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::istringstream is(line);
      std::string head;
      if (!(is >> head) || head[0] == '#') continue;
      if (head == "ground") {
        std::string name;
        while (is >> name) {
          index[name] = names.size();
          names.push_back(name);
        }
        family.ground_size = names.size();
      } else if (head == "set") {
        std::vector<std::size_t> s;
        std::string name;
        while (is >> name) {
          auto it = index.find(name);
          if (it == index.end()) {
            std::cerr << path << ":" << lineno << ": unknown element '" << name << "'\n";
            return kUsage;
          }
          s.push_back(it->second);
        }
        family.members.push_back(std::move(s));
      } else {
        std::cerr << path << ":" << lineno << ": unknown directive '" << head << "'\n";
        return kUsage;
      }
    }
    auto rep = find_sdr(family);
    json j;
    j["exists"] = rep.has_value();
    std::string text;
    if (rep) {
      j["sdr"] = json::array();
      text = "sdr:";
      for (auto x : *rep) {
        j["sdr"].push_back(names[x]);
        text += " " + names[x];
      }
      text += "\n";
    } else {
      text = "none\n";
    }
    emit(j, as_json, text);
    return rep ? kOk : kInfeasible;
  }

  FinitePoset p = parse_poset_file(path);
  json j;
  std::string text;
  if (do_width || !(do_validate || do_cover)) {
    auto w = width(p);
    j["width"] = w.width;
    j["antichain"] = json::array();
    text += std::to_string(w.width) + "\n";
    std::string line = "antichain:";
    for (auto i : w.antichain) {
      j["antichain"].push_back(p.label(i));
      line += " " + p.label(i);
    }
    text += line + "\n";
  }
  if (do_validate) {
    auto cp = covering_pairs(p);
    j["elements"] = p.size();
    j["covering_pairs"] = cp.size();
    j["hasse_index"] = p.empty() ? "0" : render_rational(hasse_index(p));
    text += "valid elements=" + std::to_string(p.size()) +
            " covering_pairs=" + std::to_string(cp.size());
    if (!p.empty()) text += " hasse_index=" + render_rational(hasse_index(p));
    text += "\n";
  }
  if (do_cover) {
    auto cover = disjoint_chain_cover(p);
    j["chains"] = json::array();
    for (const auto& chain : cover.chains) {
      json c = json::array();
      std::string line = "chain:";
      for (auto i : chain.members) {
        c.push_back(p.label(i));
        line += " " + p.label(i);
      }
      j["chains"].push_back(c);
      text += line + "\n";
    }
  }
  emit(j, as_json, text);
  return kOk;
}

int run_gos(const std::string& path, bool do_validate, bool do_classify, bool as_json) {
  auto g = parse_gos_file(path);
  json j;
  std::string text;
  int rc = kOk;
  if (do_validate || !do_classify) {
    auto report = validate_space(g);
    j["axioms_ok"] = report.ok();
    j["failures"] = json::array();
    for (const auto& f : report.failures) {
      j["failures"].push_back({{"axiom", f.axiom}, {"witness", g.render_subset(f.witness)}});
      text += "axiom " + f.axiom + " fails, witness " + g.render_subset(f.witness) + "\n";
    }
    if (report.ok()) {
      auto adm = check_admissible_granulation(g);
      j["wra"] = adm.wra;
      j["ls"] = adm.ls;
      j["fu"] = adm.fu;
      text += std::string("axioms ok; admissible granulation: wra=") +
              (adm.wra ? "yes" : "no") + " ls=" + (adm.ls ? "yes" : "no") +
              " fu=" + (adm.fu ? "yes" : "no") + "\n";
    } else {
      rc = kInfeasible;
    }
  }
  if (do_classify && rc == kOk) {
    auto o = oracle_classify(g);
    j["n"] = o.n;
    j["k"] = o.k;
    j["rough"] = o.rough;
    j["pairs"] = json::array();
    text += "n=" + std::to_string(o.n) + " k=" + std::to_string(o.k) +
            " rough=" + std::to_string(o.rough) + "\n";
    for (const auto& [pair, count] : o.multiplicity) {
      j["pairs"].push_back({{"lower", g.render_subset(pair.first)},
                            {"upper", g.render_subset(pair.second)},
                            {"count", count}});
      text += "pair " + g.render_subset(pair.first) + " " + g.render_subset(pair.second) +
              " count=" + std::to_string(count) + "\n";
    }
  }
  emit(j, as_json, text);
  return rc;
}

int run_figures(int fig, const Integer& n_max, const Integer& n_from, const Integer& n_to,
                const Integer& n_step, const std::vector<std::string>& pi_texts,
                const std::string& out_path) {
  std::ostringstream csv;
  if (fig == 1) {
    csv << "# case-0 models: rough objects between crisp objects\n";
    csv << "# rough_per_crisp_gap = (n-k)/k\n";
    csv << "n,k,rough_total,rough_per_crisp_gap\n";
    for (Integer k = 1; k * k + k <= n_max; ++k) {
      Integer n = k * k + k;
      csv << n.str() << "," << k.str() << "," << Integer(n - k).str() << ","
          << render_rational(Rational(n - k, k)) << "\n";
    }
  } else if (fig == 2) {
    csv << "# case-0 admissible (n, k) pairs\n";
    csv << "n,k\n";
    for (Integer k = 1; k * k + k <= n_max; ++k)
      csv << Integer(k * k + k).str() << "," << k.str() << "\n";
  } else if (fig == 3) {
    csv << "# power-set models: 2^x = k^2\n";
    csv << "x,k,n\n";
    for (const auto& m : case1_powerset_models(n_max))
      csv << m.x << "," << m.k.str() << "," << m.n.str() << "\n";
  } else if (fig == 4 || fig == 5) {
    const bool trimmed = fig == 5;
    csv << (trimmed ? "# trimmed number of possible values of k\n"
                    : "# number of possible values of k\n");
    csv << "n,pi,count\n";
    std::vector<Rational> pis;
    for (const auto& t : pi_texts) pis.push_back(parse_rational(t));
    if (pis.empty()) pis.push_back(Rational(1, 2));
    for (Integer n = n_from; n <= n_to; n += n_step)
      for (const auto& pi : pis)
        csv << n.str() << "," << render_rational(pi) << ","
            << case2_count_values(n, pi, trimmed).str() << "\n";
  } else {
    std::cerr << "unknown figure " << fig << "\n";
    return kUsage;
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return kIo;
  }
  out << csv.str();
  if (!out) {
    std::cerr << "write failed for " << out_path << "\n";
    return kIo;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"feasibility, counting, and distribution indices for crisp/rough object populations"};
  app.require_subcommand(1);

  // feasible
  std::string case_name, alpha_text, pi_text;
  std::string n_text = "1";
  bool trimmed = false, as_json = false;
  auto* feasible = app.add_subcommand("feasible", "admissible crisp-object counts");
  feasible->add_option("--case", case_name, "0, 1, 1p, or 2")->required()
      ->check(CLI::IsMember({"0", "1", "1p", "2"}));
  feasible->add_option("--n", n_text, "total object count (bound for case 1p)")->required();
  feasible->add_option("--alpha", alpha_text, "case-2 upper bound, exact P/Q");
  feasible->add_option("--pi", pi_text, "case-2 exact fraction P/Q");
  feasible->add_flag("--trimmed", trimmed, "apply the k <= floor(sqrt(n)) bound");
  feasible->add_flag("--json", as_json);

  // count
  std::string r_text = "0", lo_text = "0", hi_text = "0", cover_path;
  std::size_t g_slots = 0;
  bool verify = false, count_json = false;
  auto* count = app.add_subcommand("count", "exact model counting");
  count->add_option("--r", r_text, "rough objects to distribute")->required();
  count->add_option("--g", g_slots, "slot count");
  count->add_option("--min", lo_text, "lower slot bound a");
  count->add_option("--max", hi_text, "upper slot bound b");
  count->add_option("--chain-cover", cover_path, "poset file for chain-cover counting");
  count->add_flag("--verify", verify, "compare with the placement oracle");
  count->add_flag("--json", count_json);

  // index
  std::string space_path, convention = "nondefinite";
  bool index_json = false;
  auto* index = app.add_subcommand("index", "rough distribution index");
  index->add_option("--space", space_path, "granular operator space file")->required();
  index->add_option("--convention", convention)->check(CLI::IsMember({"nondefinite", "maximal"}));
  index->add_flag("--json", index_json);

  // poset
  std::string poset_path;
  bool p_validate = false, p_width = false, p_cover = false, p_sdr = false, poset_json = false;
  auto* poset = app.add_subcommand("poset", "poset utilities");
  poset->add_flag("--validate", p_validate);
  poset->add_flag("--width", p_width);
  poset->add_flag("--cover", p_cover);
  poset->add_flag("--sdr", p_sdr, "treat the file as a set family and find an SDR");
  poset->add_option("file", poset_path)->required();
  poset->add_flag("--json", poset_json);

  // gos
  std::string gos_path;
  bool g_validate = false, g_classify = false, gos_json = false;
  auto* gos = app.add_subcommand("gos", "granular operator space utilities");
  gos->add_flag("--validate", g_validate);
  gos->add_flag("--classify", g_classify);
  gos->add_option("file", gos_path)->required();
  gos->add_flag("--json", gos_json);

  // figures
  int fig = 0;
  std::string n_max_text = "100", n_from_text = "3", n_to_text = "100", n_step_text = "1";
  std::vector<std::string> pi_texts;
  std::string out_path;
  auto* figures = app.add_subcommand("figures", "CSV emission");
  figures->add_option("--fig", fig, "figure number 1-5")->required();
  figures->add_option("--n-max", n_max_text, "upper bound for figs 1-3");
  figures->add_option("--n-from", n_from_text, "grid start for figs 4-5");
  figures->add_option("--n-to", n_to_text, "grid end for figs 4-5");
  figures->add_option("--n-step", n_step_text, "grid step for figs 4-5");
  figures->add_option("--pi", pi_texts, "pi values P/Q for figs 4-5");
  figures->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*feasible)
      return run_feasible(case_name, Integer(n_text), alpha_text, pi_text, trimmed, as_json);
    if (*count)
      return run_count(Integer(r_text), g_slots, Integer(lo_text), Integer(hi_text),
                       cover_path, verify, count_json);
    if (*index) return run_index(space_path, convention, index_json);
    if (*poset)
      return run_poset(poset_path, p_validate, p_width, p_cover, p_sdr, poset_json);
    if (*gos) return run_gos(gos_path, g_validate, g_classify, gos_json);
    if (*figures)
      return run_figures(fig, Integer(n_max_text), Integer(n_from_text), Integer(n_to_text),
                         Integer(n_step_text), pi_texts, out_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FeasibilityError& e) {
    if (e.kind() == FeasibilityError::Kind::DegenerateRange) {
      std::cerr << "infeasible: " << e.what() << "\n";
      return kInfeasible;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
