#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordlat/analysis.hpp"
#include "wordlat/oracle.hpp"

namespace wl = wordlat;

namespace {

int emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  return out ? 0 : 1;
}

std::string set_braces(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

std::string stats_line(const wl::MNWord& w) {
  const wl::WordStats st = wl::word_stats(w);
  return w.str() + " min=" + std::to_string(st.min_letter) + " support=" +
         set_braces(st.support) + " top=" + std::to_string(st.top_count) +
         " in=" + std::to_string(st.in_degree);
}

nlohmann::json stats_json(const wl::MNWord& w) {
  const wl::WordStats st = wl::word_stats(w);
  return {{"word", w.str()},
          {"letters", w.letters()},
          {"min_letter", st.min_letter},
          {"support", st.support},
          {"top_count", st.top_count},
          {"in_degree", st.in_degree}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word lattice toolkit: enumeration, certification, and cross-checks for W(m,n)"};
  app.require_subcommand(1);

  int m = 1;
  int n = 3;
  std::string output;
  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("-m,--m", m, "letters run over 0..m+1")->check(CLI::NonNegativeNumber);
    sub->add_option("-n,--n", n, "word length")->check(CLI::NonNegativeNumber);
  };
  auto add_format = [&](CLI::App* sub, std::string* fmt, std::vector<std::string> allowed) {
    sub->add_option("--format", *fmt, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
    sub->add_option("-o,--output", output, "write to a file instead of stdout");
  };

  auto* cmd_enum = app.add_subcommand("enumerate", "list W(m,n) in lexicographic order");
  std::string enum_fmt = "text";
  add_mn(cmd_enum);
  add_format(cmd_enum, &enum_fmt, {"text", "json"});

  auto* cmd_stats = app.add_subcommand("stats", "per-word support, top count, and in-degree");
  std::string stats_fmt = "text";
  std::string stats_word;
  add_mn(cmd_stats);
  add_format(cmd_stats, &stats_fmt, {"text", "json"});
  cmd_stats->add_option("--word", stats_word, "restrict to one word (its length overrides -n)");

  auto* cmd_cert = app.add_subcommand("certify", "lattice certificate for W(m,n)");
  std::string cert_fmt = "text";
  add_mn(cmd_cert);
  add_format(cmd_cert, &cert_fmt, {"text", "json"});

  auto* cmd_hasse = app.add_subcommand("export-hasse", "cover relation of W(m,n)");
  std::string hasse_fmt = "dot";
  add_mn(cmd_hasse);
  add_format(cmd_hasse, &hasse_fmt, {"dot", "json"});

  auto* cmd_galois = app.add_subcommand("galois", "Galois graph of W(m,n)");
  std::string galois_fmt = "dot";
  add_mn(cmd_galois);
  add_format(cmd_galois, &galois_fmt, {"dot", "json", "text"});

  auto* cmd_h = app.add_subcommand("h-triangle", "in-degree / atom-count distribution of W(m,n)");
  std::string h_fmt = "text";
  add_mn(cmd_h);
  add_format(cmd_h, &h_fmt, {"text", "csv", "json"});

  auto* cmd_conj = app.add_subcommand("conjecture",
                                      "compare the in-degree counts with the product formula");
  std::string conj_fmt = "text";
  int conj_max_m = 8, conj_max_n = 8, conj_max_a = -1;
  add_format(cmd_conj, &conj_fmt, {"text", "json"});
  cmd_conj->add_option("--max-m", conj_max_m)->check(CLI::NonNegativeNumber);
  cmd_conj->add_option("--max-n", conj_max_n)->check(CLI::NonNegativeNumber);
  cmd_conj->add_option("--max-a", conj_max_a, "cap on the in-degree, unbounded when omitted");

  auto* cmd_dbl = app.add_subcommand("doubling-trace",
                                     "rebuild W(m,n) by interval doubling, step by step");
  std::string dbl_fmt = "text";
  add_mn(cmd_dbl);
  add_format(cmd_dbl, &dbl_fmt, {"text", "json"});

  auto* cmd_verify = app.add_subcommand("verify", "run every oracle cross-check");
  std::string verify_fmt = "text";
  int verify_max_m = 3, verify_max_n = 4;
  long long verify_budget = 1'000'000;
  add_format(cmd_verify, &verify_fmt, {"text", "jsonl"});
  cmd_verify->add_option("--max-m", verify_max_m)->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--max-n", verify_max_n)->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--budget", verify_budget, "raw tuple cap for the oracle enumerator")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*cmd_enum) {
      const auto words = wl::enumerate_words(m, n);
      if (enum_fmt == "text") {
        std::string out;
        for (const auto& w : words) out += w.str() + "\n";
        return emit(output, out);
      }
      nlohmann::json j{{"m", m}, {"n", n}, {"count", words.size()}};
      auto& arr = j["words"] = nlohmann::json::array();
      for (const auto& w : words) arr.push_back(w.to_json());
      return emit(output, j.dump(2) + "\n");
    }

    if (*cmd_stats) {
      std::vector<wl::MNWord> words;
      if (cmd_stats->count("--word")) {
        words.push_back(wl::MNWord::parse(m, stats_word));
      } else {
        words = wl::enumerate_words(m, n);
      }
      if (stats_fmt == "text") {
        std::string out;
        for (const auto& w : words) out += stats_line(w) + "\n";
        return emit(output, out);
      }
      nlohmann::json j = nlohmann::json::array();
      for (const auto& w : words) j.push_back(stats_json(w));
      return emit(output, j.dump(2) + "\n");
    }

    if (*cmd_cert) {
      const auto cert = wl::certify(wl::word_poset(m, n));
      if (cert_fmt == "text") return emit(output, cert.to_text());
      return emit(output, cert.to_json().dump(2) + "\n");
    }

    if (*cmd_hasse) {
      const auto p = wl::word_poset(m, n);
      if (hasse_fmt == "dot") return emit(output, wl::to_dot(p));
      return emit(output, wl::to_json(p).dump(2) + "\n");
    }

    if (*cmd_galois) {
      const auto g = wl::galois_graph_direct(m, n);
      if (galois_fmt == "dot") return emit(output, g.to_dot());
      if (galois_fmt == "json") return emit(output, g.to_json().dump(2) + "\n");
      std::string out = "galois graph of W(" + std::to_string(m) + "," + std::to_string(n) + ")\n";
      for (const auto& v : g.vertices)
        out += "vertex " + v.name() + " = " + v.materialize(m, n).str() + "\n";
      for (const auto& [a, b] : g.edges)
        out += "edge " + g.vertices[a].name() + " -> " + g.vertices[b].name() + "\n";
      return emit(output, out);
    }

    if (*cmd_h) {
      const auto t = wl::h_triangle(m, n);
      if (h_fmt == "csv") return emit(output, t.csv());
      if (h_fmt == "json") return emit(output, t.to_json().dump(2) + "\n");
      std::string out = "h-triangle of W(" + std::to_string(m) + "," + std::to_string(n) + ")\n";
      for (int a = 0; a <= n; ++a) {
        out += "a=" + std::to_string(a) + ":";
        for (int b = 0; b <= a; ++b) out += " " + t.coefficient(a, b).str();
        out += "\n";
      }
      out += "total: " + t.total().str() + "\n";
      out += "h(x,y) = " + t.polynomial() + "\n";
      return emit(output, out);
    }

    if (*cmd_conj) {
      std::optional<int> cap;
      if (cmd_conj->count("--max-a")) cap = conj_max_a;
      const auto scan = wl::scan_in_degree_conjecture(conj_max_m, conj_max_n, cap);
      int rc = 0;
      if (conj_fmt == "json") {
        rc = emit(output, scan.to_json().dump(2) + "\n");
      } else {
        std::string out = "checked " + std::to_string(scan.checked) + " in-degree counts for m <= " +
                          std::to_string(scan.max_m) + ", n <= " + std::to_string(scan.max_n) + "\n";
        out += std::string("agreement: ") + (scan.agreed ? "yes" : "no") + "\n";
        if (!scan.agreed)
          out += "first mismatch at m=" + std::to_string(scan.witness_m) + " n=" +
                 std::to_string(scan.witness_n) + " a=" + std::to_string(scan.witness_a) +
                 ": direct " + scan.lhs.str() + ", product formula " + scan.rhs.str() + "\n";
        rc = emit(output, out);
      }
      return rc != 0 ? rc : (scan.agreed ? 0 : 2);
    }

    if (*cmd_dbl) {
      const auto trace = wl::build_by_doubling(m, n);
      if (dbl_fmt == "text") return emit(output, trace.to_text());
      return emit(output, trace.to_json().dump(2) + "\n");
    }

    if (*cmd_verify) {
      wl::oracle::SuiteConfig cfg;
      cfg.max_m = verify_max_m;
      cfg.max_n = verify_max_n;
      cfg.budget = verify_budget;
      const auto reports = wl::oracle::run_suite(cfg);
      int rc = 0;
      if (verify_fmt == "jsonl") {
        rc = emit(output, wl::oracle::to_jsonl(reports));
      } else {
        std::string out;
        int failures = 0;
        for (const auto& r : reports) {
          const std::string where =
              "W(" + std::to_string(r.m) + "," + std::to_string(r.n) + ") " + r.subject;
          if (r.agreed) {
            out += "[ ok ] " + where + "\n";
          } else {
            out += "[FAIL] " + where + ": " + r.witness + "\n";
            ++failures;
          }
        }
        out += std::to_string(reports.size()) + " checks, " + std::to_string(failures) +
               (failures == 1 ? " disagreement\n" : " disagreements\n");
        rc = emit(output, out);
      }
      return rc != 0 ? rc : (wl::oracle::all_agreed(reports) ? 0 : 2);
    }
  } catch (const wl::PipelineMismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 1;
}
