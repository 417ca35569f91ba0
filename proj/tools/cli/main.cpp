/*
 *   Copyright 2026 The maxalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <json.hpp>
#include <string>
#include <vector>

#include "matrix_io.hpp"
#include "maxalg/maxalg.hpp"
#include "maxalg/verify/acceptance.hpp"

namespace {

using nlohmann::json;
using namespace maxalg;
using cli::MatrixFile;

enum ExitCode { ok = 0, usage = 1, parse = 2, precondition = 3, inconclusive = 4, verify_failed = 5 };

struct Settings {
  std::string format = "text";
  std::string input_format = "auto";
  Tolerances tol;
  bool timings = false;
  std::optional<std::size_t> max_steps;
};

class Timer {
 public:
  template <class F>
  auto phase(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    ms_[name] += took.count();
    return result;
  }
  json to_json() const { return ms_; }

 private:
  std::map<std::string, double> ms_;
};

json matrix_json(const MaxMatrix& m) { return m.rows(); }

json one_based(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (std::size_t x : v) out.push_back(x + 1);
  return out;
}

json edges_json(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  json out = json::array();
  for (auto [i, j] : edges) out.push_back({i + 1, j + 1});
  return out;
}

json limits_json(const std::vector<MaxMatrix>& limits) {
  json out = json::array();
  for (std::size_t j = 0; j < limits.size(); ++j) {
    out.push_back({{"j", j + 1}, {"matrix", matrix_json(limits[j])}});
  }
  return out;
}

bool is_matrix(const json& v) {
  return v.is_array() && !v.empty() &&
         std::all_of(v.begin(), v.end(), [](const json& r) {
           return r.is_array() && !r.empty() &&
                  std::all_of(r.begin(), r.end(), [](const json& x) { return x.is_number(); });
         });
}

bool is_flat(const json& v) {
  return v.is_array() &&
         std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

std::string scalar_text(const json& v) {
  if (v.is_number_float()) return cli::format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render(std::ostream& os, const json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string key = v.is_object() ? it.key() : "-";
    const json& x = it.value();
    if (x.is_primitive()) {
      os << indent << key << ": " << scalar_text(x) << '\n';
    } else if (is_matrix(x)) {
      os << indent << key << ":\n";
      for (const auto& row : x) {
        os << indent << "  ";
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "\t" : "") << scalar_text(row[k]);
        os << '\n';
      }
    } else if (is_flat(x)) {
      os << indent << key << ":";
      for (const auto& e : x) os << ' ' << scalar_text(e);
      os << '\n';
    } else {
      os << indent << key << ":\n";
      render(os, x, indent + "  ");
    }
  }
}

cli::InputFormat input_format(const Settings& s) {
  if (s.input_format == "tsv") return cli::InputFormat::tsv;
  if (s.input_format == "json") return cli::InputFormat::json;
  return cli::InputFormat::automatic;
}

IterationOptions iteration(const Settings& s) {
  IterationOptions o;
  o.tol = s.tol;
  o.max_steps = s.max_steps;
  return o;
}

struct Command {
  std::string name;
  std::vector<std::string> inputs;
  std::function<json(Timer&)> run;
};

std::vector<MatrixFile> load_all(const std::vector<std::string>& paths, const Settings& s,
                                 Timer& t) {
  return t.phase("parse", [&] {
    std::vector<MatrixFile> out;
    for (const auto& p : paths) out.push_back(cli::read_matrix(p, input_format(s)));
    for (const auto& f : out) {
      if (f.matrix.size() != out.front().matrix.size()) {
        throw DimensionError("matrices differ in dimension");
      }
    }
    return out;
  });
}

std::vector<MaxMatrix> matrices_of(const std::vector<MatrixFile>& files) {
  std::vector<MaxMatrix> out;
  for (const auto& f : files) out.push_back(f.matrix);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-times matrix algebra: circuit means, spectra, periods and limits"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--input-format", s.input_format, "Matrix file format")
      ->check(CLI::IsMember({"auto", "tsv", "json"}))
      ->capture_default_str();
  app.add_option("--tol-exact", s.tol.exact, "Tolerance for exact algebra")->capture_default_str();
  app.add_option("--tol-structural", s.tol.structural, "Tolerance for criticality and eigen-equations")
      ->capture_default_str();
  app.add_option("--tol-zero", s.tol.zero, "Entries below this count as zero in limits")
      ->capture_default_str();
  app.add_flag("--timings", s.timings, "Include per-phase wall-clock times");

  Command cmd;
  std::string file;
  std::vector<std::string> files;
  std::string word_text;
  std::string seed_text;
  std::string x_text;
  std::string coeff_text;
  std::vector<std::string> vector_texts;
  std::size_t j_index = 0;
  std::size_t steps = 0;
  bool candidates = false;

  auto single = [&](const std::string& name, const std::string& help,
                    std::function<json(const MaxMatrix&, Timer&)> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Matrix file, or - for stdin")->required();
    sub->callback([&cmd, &file, &s, name, body] {
      cmd = {name, {file}, [&file, &s, body](Timer& t) {
               const auto files = load_all({file}, s, t);
               return t.phase("compute", [&] { return body(files.front().matrix, t); });
             }};
    });
    return sub;
  };

  single("mu", "Maximum circuit geometric mean, bounds and critical circuits",
         [&](const MaxMatrix& a, Timer&) {
           const MuBounds b = mu_bounds(a);
           json r{{"mu", mu(a)}, {"bounds", {{"lower", b.lower}, {"upper", b.upper}}}};
           if (r["mu"].get<double>() > 0) {
             const CriticalGraph cg = critical_graph(a, s.tol);
             r["critical"] = {{"vertices", one_based(cg.critical_vertices)},
                              {"edges", edges_json(cg.critical_edges)}};
           } else {
             r["critical"] = nullptr;
           }
           return r;
         });

  single("fnf", "Frobenius normal form", [&](const MaxMatrix& a, Timer&) {
    const FrobeniusForm f = frobenius_form(a);
    json classes = json::array();
    for (std::size_t c = 0; c < f.class_count(); ++c) {
      classes.push_back({{"vertices", one_based(f.classes[c])},
                         {"kind", f.kinds[c] == BlockKind::irreducible ? "irreducible" : "null"}});
    }
    return json{{"permutation", one_based(f.permutation)},
                {"classes", classes},
                {"permuted", matrix_json(apply_permutation(a, f))}};
  });

  single("critical", "Critical graph", [&](const MaxMatrix& a, Timer&) {
    const CriticalGraph cg = critical_graph(a, s.tol);
    return json{{"mu", cg.mu},
                {"vertices", one_based(cg.critical_vertices)},
                {"edges", edges_json(cg.critical_edges)},
                {"critical_matrix", matrix_json(cg.critical_matrix)}};
  });

  single("spectrum", "Max eigenvalues and eigenvectors", [&](const MaxMatrix& a, Timer&) {
    const SpectralReport rep = spectrum(a, s.tol);
    json classes = json::array();
    for (const auto& c : rep.classes) {
      classes.push_back({{"class", c.class_index + 1},
                         {"vertices", one_based(rep.form.classes[c.class_index])},
                         {"mu", c.mu},
                         {"admissible", c.admissible}});
    }
    json pairs = json::array();
    for (const auto& p : rep.eigenpairs) {
      pairs.push_back({{"value", p.value}, {"class", p.witness_class + 1}, {"vector", p.vector}});
    }
    return json{{"mu", rep.mu}, {"classes", classes}, {"eigenpairs", pairs}};
  });

  single("scale", "Diagonal similarity bounding the matrix by ones", [&](const MaxMatrix& a, Timer&) {
    const MaxVector seed = seed_text.empty() ? MaxVector(a.size(), 1.0) : cli::parse_vector(seed_text);
    const DadScaling d = dad_scale(a, seed, s.tol);
    return json{{"d", d.d}, {"scaled", matrix_json(d.scaled)}};
  })->add_option("--seed", seed_text, "Comma separated positive seed vector (default all ones)");

  single("period", "Period and transient of the power sequence", [&](const MaxMatrix& a, Timer&) {
    const PeriodReport p = a.is_boolean() ? boolean_period(a, iteration(s)) : elsner_period(a, iteration(s));
    return json{{"q", p.q}, {"t0", p.t0}, {"method", std::string(to_string(p.method))}};
  });

  single("power-limit", "Limits of A^(kq+j)", [&](const MaxMatrix& a, Timer&) {
    const PowerLimit pl = power_limit(a, iteration(s));
    return json{{"q", pl.q}, {"t0", pl.t0}, {"limits", limits_json(pl.limits)}};
  });

  {
    CLI::App* apply = single("apply", "Periodic points of x under the power limits",
                             [&](const MaxMatrix& a, Timer&) {
      const MaxVector x = cli::parse_vector(x_text);
      const PowerLimit pl = power_limit(a, iteration(s));
      json points = json::array();
      for (std::size_t j = 1; j <= pl.q; ++j) {
        if (j_index != 0 && j != j_index) continue;
        const PeriodicPoint p = periodic_point(a, x, pl, j, s.tol);
        points.push_back({{"j", j}, {"point", p.point}, {"period", p.period}});
      }
      if (j_index > pl.q) {
        throw PreconditionError("--j " + std::to_string(j_index) + " exceeds q = " +
                                std::to_string(pl.q));
      }
      return json{{"q", pl.q}, {"points", points}};
    });
    apply->add_option("--x", x_text, "Comma separated vector")->required();
    apply->add_option("--j", j_index, "Only this residue (1..q)");
  }

  {
    CLI::App* sub = app.add_subcommand("word-limit", "Limits of powers of a word product");
    sub->add_option("--matrix", files, "Matrix file for each letter, in order")->required();
    sub->add_option("--word", word_text, "Letters, e.g. 1,2,1")->required();
    sub->add_flag("--candidates", candidates,
                  "Two matrices with eigenvalues 0 or 1: list the candidate products");
    sub->callback([&] {
      cmd = {"word-limit", files, [&](Timer& t) {
               const auto mats = matrices_of(load_all(files, s, t));
               const Word w = Word::parse(word_text);
               return t.phase("compute", [&] {
                 if (candidates) {
                   if (mats.size() != 2) {
                     throw PreconditionError("--candidates needs exactly two matrices");
                   }
                   const BooleanWordLimit b = two_matrix_boolean_limit(mats[0], mats[1], w, iteration(s));
                   json cand = json::array();
                   for (std::size_t k = 0; k < b.candidates.size(); ++k) {
                     cand.push_back({{"t", b.t0 + k}, {"matrix", matrix_json(b.candidates[k])}});
                   }
                   return json{{"t0", b.t0}, {"q", b.q}, {"cycle_period", b.cycle_period},
                               {"candidates", cand}, {"member", b.member},
                               {"limits", limits_json(b.cycle)}};
                 }
                 const WordLimit wl = commuting_word_limit(mats, w, iteration(s));
                 return json{{"q", wl.limit.q}, {"t0", wl.limit.t0},
                             {"cycle_period", wl.cycle_period}, {"counts", wl.counts},
                             {"limits", limits_json(wl.limit.limits)}};
               });
             }};
    });
  }

  {
    CLI::App* sub = app.add_subcommand("lc-limit", "Limit of A_w^k x for x in a common eigenvector span");
    sub->add_option("--matrix", files, "Matrix file for each letter, in order")->required();
    sub->add_option("--word", word_text, "Letters, e.g. 1,2")->required();
    sub->add_option("--vector", vector_texts, "Candidate common eigenvector, comma separated")->required();
    sub->add_option("--coeff", coeff_text, "Coefficients, one per accepted vector")->required();
    sub->callback([&] {
      cmd = {"lc-limit", files, [&](Timer& t) {
               const auto mats = matrices_of(load_all(files, s, t));
               const Word w = Word::parse(word_text);
               std::vector<MaxVector> cands;
               for (const auto& v : vector_texts) cands.push_back(cli::parse_vector(v));
               const MaxVector coeffs = cli::parse_vector(coeff_text);
               return t.phase("compute", [&] {
                 const CommonEigenbasis basis = common_eigenbasis(mats, cands, s.tol);
                 const LcLimit lim = lc_limit(mats, basis, coeffs, w, iteration(s));
                 return json{{"persistent", one_based(basis.persistent)},
                             {"transient", one_based(basis.transient)},
                             {"rejected", one_based(basis.rejected)},
                             {"eigenvalues", basis.eigenvalues},
                             {"x", lim.x},
                             {"xi", lim.xi},
                             {"steps", lim.steps}};
               });
             }};
    });
  }

  single("oracle", "Brute-force iteration until the powers repeat", [&](const MaxMatrix& a, Timer&) {
    const IterationOptions o = iteration(s);
    const std::size_t cap = steps ? steps : step_cap(o, a.size(), a.size());
    const OracleTrace tr = oracle_iterate(a, cap, o);
    json r{{"outcome", std::string(to_string(tr.outcome))}, {"steps", tr.powers.size()}};
    if (tr.outcome == OracleOutcome::cycle) {
      r["t0"] = tr.t0;
      r["q"] = tr.q;
      r["exact"] = tr.exact;
    } else if (tr.outcome == OracleOutcome::converges_to_zero) {
      r["zero_step"] = tr.zero_step;
    }
    return r;
  })->add_option("--steps", steps, "Iteration cap");

  bool verify_all_passed = true;
  {
    CLI::App* sub = app.add_subcommand("verify-fixtures", "Run the acceptance suite on the built-in fixtures");
    sub->callback([&] {
      cmd = {"verify-fixtures", {}, [&](Timer& t) {
               return t.phase("compute", [&] {
                 json crit = json::array();
                 for (const auto& r : verify::run_acceptance()) {
                   verify_all_passed = verify_all_passed && r.passed;
                   crit.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                                   {"detail", r.detail}});
                 }
                 return json{{"criteria", crit}, {"passed", verify_all_passed}};
               });
             }};
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  if (const char* env = std::getenv("MAXALG_MAX_STEPS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*env == '\0' || *end != '\0' || v == 0) {
      std::cerr << "error: MAXALG_MAX_STEPS must be a positive integer\n";
      return ExitCode::usage;
    }
    s.max_steps = static_cast<std::size_t>(v);
  }

  try {
    Timer timer;
    const json result = cmd.run(timer);
    if (s.format == "json") {
      json report{{"command", cmd.name}, {"inputs", cmd.inputs}, {"result", result}};
      if (s.timings) report["timings_ms"] = timer.to_json();
      std::cout << report.dump(2) << '\n';
    } else if (cmd.name == "verify-fixtures") {
      for (const auto& c : result["criteria"]) {
        verify::CriterionResult r{c["id"].get<int>(), c["name"].get<std::string>(),
                                  c["passed"].get<bool>(), c["detail"].get<std::string>()};
        std::cout << verify::format_line(r) << '\n';
      }
    } else {
      render(std::cout, result, "");
      if (s.timings) {
        std::cout << "timings_ms:\n";
        render(std::cout, timer.to_json(), "  ");
      }
    }
    if (cmd.name == "verify-fixtures" && !verify_all_passed) return ExitCode::verify_failed;
    return ExitCode::ok;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return ExitCode::parse;
  } catch (const cli::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode::parse;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return ExitCode::inconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCode::precondition;
  }
}
