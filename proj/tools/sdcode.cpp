// Command-line front end.
//
// Exit codes: 0 success, 2 verification mismatch, 3 resource budget,
// 4 input error, 1 internal error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdcode/manifest.hpp"
#include "sdcode/paper_data_embedded.hpp"
#include "sdcode/sdcode.hpp"

namespace fs = std::filesystem;
using namespace sdcode;

namespace {

constexpr int kMismatch = 2;
constexpr int kResource = 3;
constexpr int kInput = 4;

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const PaperData& paper() {
  static const PaperData data = [] {
    if (sha256_hex(kPaperDataJson) != kPaperDataSha256) throw InternalError("built-in paper data fails its checksum");
    return PaperData::parse(kPaperDataJson);
  }();
  return data;
}

// A code given as a JSON file path or as a built-in name such as D60_3.
struct LoadedCode {
  NamedCode code;
  std::string digest;
};

LoadedCode load_code(const std::string& spec) {
  if (fs::exists(spec)) {
    const auto text = read_text(spec);
    try {
      auto c = parse_code(text);
      if (c.name.empty()) c.name = fs::path(spec).stem().string();
      return {std::move(c), sha256_hex(text)};
    } catch (const ParseError& e) {
      throw ParseError(spec + ": " + e.what(), 0);
    }
  }
  if (paper().contains(spec)) return {{spec, paper().build(spec)}, std::string(kPaperDataSha256)};
  throw ArgumentError("no code file or built-in code named " + spec);
}

struct Output {
  std::string path;  // empty: standard output
  RunManifest manifest;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const std::string& text) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    write_text(path, text);
    manifest.add_output(fs::path(path).filename().string(), text);
    manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(path, manifest);
  }
};

void progress_line(const std::string& what, std::uint64_t done, std::uint64_t total) {
  static std::uint64_t last_percent = 101;
  const std::uint64_t percent = total ? done * 100 / total : 100;
  if (percent == last_percent) return;
  last_percent = percent;
  std::fprintf(stderr, "%s %llu/%llu (%llu%%)\n", what.c_str(), static_cast<unsigned long long>(done),
               static_cast<unsigned long long>(total), static_cast<unsigned long long>(percent));
}

json distribution_json(const Distribution& d) {
  json out = json::object();
  for (std::size_t w = 0; w <= d.n; ++w) {
    if (d[w]) out[std::to_string(w)] = d[w];
  }
  return out;
}

json family_json(const FamilyParams& f) {
  json out{{"family", to_string(f.family)}};
  if (f.beta) out["beta"] = *f.beta;
  if (f.gamma) out["gamma"] = *f.gamma;
  if (!f.diagnostic.empty()) out["diagnostic"] = f.diagnostic;
  return out;
}

int cmd_analyze(const std::string& spec, std::size_t threads, const std::string& csv_dir, const std::string& out_path) {
  const auto loaded = load_code(spec);
  const auto& c = loaded.code.code;
  Output out{out_path, {}};
  out.manifest.command = "analyze";
  out.manifest.parameters = {{"code", spec}};
  out.manifest.input_digests[spec] = loaded.digest;
  out.manifest.threads = resolve_threads(threads);

  json rep{{"name", loaded.code.name}, {"n", c.length()}, {"k", c.dimension()}};
  const bool sd = is_self_dual(c);
  rep["self_dual"] = sd;
  rep["parity_class"] = to_string(parity_class(c));
  if (c.dimension() == 0) {
    out.emit(rep.dump(1) + "\n");
    return 0;
  }
  const auto d = min_weight(c).weight;
  rep["d"] = d;
  const auto w = weight_distribution(c, threads);
  if (w.min_weight() != d) throw InternalError("minimum weight disagrees with the distribution");
  rep["weight_distribution"] = distribution_json(w);
  if (sd) rep["macwilliams"] = macwilliams_check(w, c.dimension());
  if (!csv_dir.empty()) {
    fs::create_directories(csv_dir);
    write_text((fs::path(csv_dir) / (loaded.code.name + ".weights.csv")).string(), format_distribution(w));
  }
  if (sd && parity_class(c) == ParityClass::singly_even) {
    const auto s = shadow_distribution(c, threads);
    rep["shadow_distribution"] = distribution_json(s);
    rep["family"] = family_json(classify_enumerator(w, s));
    const auto b = check_shadow_balance(w, s, d);
    rep["shadow_balance"] = {{"verdict", to_string(b.verdict)}, {"reason", b.reason}};
    if (b.multiple_weight_one) rep["shadow_balance"]["multiple_weight_one"] = true;
    if (!csv_dir.empty()) {
      write_text((fs::path(csv_dir) / (loaded.code.name + ".shadow.csv")).string(), format_distribution(s));
    }
  }
  out.emit(rep.dump(1) + "\n");
  return 0;
}

int cmd_search(SearchOptions opt, bool classify_output, const std::string& out_path, const std::string& report_path) {
  opt.progress = [](std::uint64_t done, std::uint64_t total) { progress_line("search", done, total); };
  Output out{out_path, {}};
  out.manifest.command = "search";
  out.manifest.parameters = {{"block", opt.block},
                             {"dmin", opt.d_target},
                             {"weight_bound", opt.weight_bound.value_or(opt.d_target ? opt.d_target - 1 : 0)},
                             {"congruence", opt.congruence},
                             {"exact", opt.exact_weight},
                             {"normalize_last_b", opt.last_b_entry_one}};
  out.manifest.threads = resolve_threads(opt.threads);
  const auto pairs = search_four_circulant(opt);
  std::fprintf(stderr, "%zu pairs\n", pairs.size());
  const auto text = format_pairs(pairs);
  out.emit(text);
  if (classify_output) {
    ClassifyOptions copt;
    copt.threads = opt.threads;
    const auto result = classify_pairs(pairs, copt);
    std::vector<std::string> names;
    for (const auto& p : pairs) names.push_back(p.ra.to_string() + ";" + p.rb.to_string());
    Output rep{report_path, {}};
    rep.manifest = out.manifest;
    rep.manifest.command = "search-classify";
    rep.manifest.output_digests.clear();
    rep.manifest.add_input("pairs", text);
    rep.emit(classification_report(names, result.classes).dump(1) + "\n");
    std::fprintf(stderr, "%zu classes\n", result.classes.size());
  }
  return 0;
}

int cmd_neighbor(const std::string& spec, const std::string& supp, const std::string& name, const std::string& out_path) {
  const auto loaded = load_code(spec);
  const auto support = parse_index_list(supp);
  for (auto s : support) {
    if (s > loaded.code.code.length()) throw ArgumentError("coordinate " + std::to_string(s) + " out of range");
  }
  auto code = neighbor(loaded.code.code, support);
  Output out{out_path, {}};
  out.manifest.command = "neighbor";
  out.manifest.parameters = {{"code", spec}, {"supp", support}};
  out.manifest.input_digests[spec] = loaded.digest;
  out.emit(format_code({name.empty() ? loaded.code.name + "-nbr" : name, std::move(code)}));
  return 0;
}

int cmd_neighbors(const std::string& spec, std::size_t d_min, std::uint64_t from, std::optional<std::uint64_t> to,
                  bool survey, const std::vector<std::string>& known_specs, bool extended, std::size_t threads,
                  const std::string& out_path) {
  const auto loaded = load_code(spec);
  const auto& c = loaded.code.code;
  Output out{out_path, {}};
  out.manifest.command = survey ? "neighbors-survey" : "neighbors";
  out.manifest.parameters = {{"code", spec}, {"dmin", d_min}, {"from", from}};
  out.manifest.input_digests[spec] = loaded.digest;
  out.manifest.threads = resolve_threads(threads);
  const std::uint64_t total = hyperplane_count(c);
  SurveyOptions sopt;
  sopt.extended = extended;
  sopt.threads = threads;
  sopt.progress = [](std::uint64_t done, std::uint64_t all) { progress_line("neighbors", done, all); };
  std::string text;
  if (survey) {
    std::vector<LinearCode> known;
    for (const auto& k : known_specs) known.push_back(load_code(k).code.code);
    const auto result = extremal_neighbor_survey(c, d_min, known, sopt);
    std::fprintf(stderr, "%llu neighbors, %llu with d >= %zu, %zu new classes\n",
                 static_cast<unsigned long long>(result.examined), static_cast<unsigned long long>(result.extremal),
                 d_min, result.new_codes.size());
    for (const auto& x : result.vectors) text += format_descriptor({loaded.code.name, x.support(), ""});
  } else {
    const std::uint64_t end = std::min(to.value_or(total), total) + 1;
    out.manifest.parameters["to"] = end - 1;
    const std::uint64_t span = end > from ? end - from : 0;
    if (span > sopt.budget && !extended) {
      throw ResourceError(std::to_string(span) + " hyperplanes exceed the default budget; narrow --from/--to or pass --extended",
                          sopt.budget);
    }
    enumerate_self_dual_neighbors(c, std::max<std::uint64_t>(from, 1), end,
                                  [&](std::uint64_t index, const BitVector& x, const LinearCode& n) {
                                    bool keep = d_min == 0;
                                    if (!keep) {
                                      const auto mw = min_weight(n, d_min);
                                      keep = mw.exact && mw.weight >= d_min;
                                    }
                                    if (keep) text += format_descriptor({loaded.code.name, x.support(), ""});
                                    progress_line("neighbors", index - from + 1, span);
                                    return true;
                                  });
  }
  out.emit(text);
  return 0;
}

int cmd_subtract(const std::string& spec, const std::string& coords, const std::string& name,
                 const std::string& out_path) {
  const auto loaded = load_code(spec);
  const auto ij = parse_index_list(coords);
  if (ij.size() != 2) throw ArgumentError("--coords takes exactly two coordinates");
  auto code = subtract_coordinates(loaded.code.code, ij[0], ij[1]);
  Output out{out_path, {}};
  out.manifest.command = "subtract";
  out.manifest.parameters = {{"code", spec}, {"coords", ij}};
  out.manifest.input_digests[spec] = loaded.digest;
  out.emit(format_code({name.empty() ? loaded.code.name + "-sub" : name, std::move(code)}));
  return 0;
}

int cmd_classify(const std::vector<std::string>& inputs, std::size_t threads, const std::string& out_path) {
  std::vector<std::string> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file() && e.path().extension() == ".json" &&
            e.path().string().find(".manifest.") == std::string::npos) {
          found.push_back(e.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(in);
    }
  }
  if (files.empty()) throw ArgumentError("no code files to classify");
  Output out{out_path, {}};
  out.manifest.command = "classify";
  out.manifest.threads = resolve_threads(threads);
  std::vector<std::string> names;
  std::vector<LinearCode> codes;
  for (const auto& f : files) {
    auto loaded = load_code(f);
    out.manifest.input_digests[f] = loaded.digest;
    names.push_back(loaded.code.name);
    codes.push_back(std::move(loaded.code.code));
  }
  ClassifyOptions copt;
  copt.threads = threads;
  out.emit(classification_report(names, classify(codes, copt)).dump(1) + "\n");
  return 0;
}

int cmd_reproduce(const std::vector<std::string>& ids, bool extended, std::size_t threads) {
  std::vector<std::string> todo = ids;
  if (todo.empty() || (todo.size() == 1 && todo[0] == "all")) todo = reproducible_tables();
  ReproduceOptions opt;
  opt.extended = extended;
  opt.threads = threads;
  opt.log = [](const std::string& s) { std::fprintf(stderr, "%s\n", s.c_str()); };
  bool ok = true;
  for (const auto& id : todo) {
    const auto rep = reproduce_table(paper(), id, opt);
    if (rep.skipped) {
      std::cout << id << " SKIP " << rep.note << "\n";
      continue;
    }
    std::size_t passed = 0;
    for (const auto& r : rep.rows) {
      std::cout << id << " " << r.name << " " << (r.pass ? "PASS" : "FAIL") << " " << r.detail << "\n";
      passed += r.pass;
    }
    std::cout << id << " " << passed << "/" << rep.rows.size() << (rep.pass() ? " PASS" : " FAIL") << "\n";
    ok = ok && rep.pass();
  }
  if (!ok) throw Mismatch("reproduction mismatch");
  return 0;
}

int cmd_balance(std::int64_t a0, std::int64_t a1, std::int64_t b0, std::int64_t b1) {
  const auto s = solve_shadow_balance(a0, a1, b0, b1);
  switch (s.kind) {
    case LineSolution::none: std::cout << "none\n"; break;
    case LineSolution::all: std::cout << "all\n"; break;
    case LineSolution::unique:
      std::cout << s.value.num;
      if (s.value.den != 1) std::cout << "/" << s.value.den;
      std::cout << "\n";
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary self-dual codes: construction, enumeration, equivalence"};
  app.require_subcommand(1);
  std::size_t threads = 0;
  bool extended = false;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");
  app.add_flag("--extended", extended, "allow extended-scale runs");

  std::string code, out, csv_dir, supp, coords, name, report;
  auto* analyze = app.add_subcommand("analyze", "self-duality, d, distributions, family");
  analyze->add_option("code", code, "code file or built-in name")->required();
  analyze->add_option("--csv-dir", csv_dir, "also write distributions as CSV");
  analyze->add_option("-o,--out", out, "report file");

  SearchOptions sopt;
  std::size_t bound = 0;
  bool classify_flag = false, exact = false, unnormalized = false;
  auto* search = app.add_subcommand("search", "exhaustive four-circulant search");
  search->add_option("--block", sopt.block, "circulant size")->capture_default_str();
  search->add_option("--dmin", sopt.d_target, "minimum weight target")->capture_default_str();
  auto* bound_opt = search->add_option("--weight-bound", bound, "lower bound on wt(ra)+wt(rb) (default dmin-1)");
  search->add_option("--congruence", sopt.congruence, "residue of wt(ra)+wt(rb) mod 4")->capture_default_str();
  search->add_flag("--exact", exact, "keep only codes whose minimum weight equals dmin");
  search->add_flag("--no-normalize", unnormalized, "do not require the last entry of rb to be 1");
  search->add_flag("--classify", classify_flag, "classify the found pairs up to equivalence");
  search->add_option("--report", report, "classification report file");
  search->add_option("-o,--out", out, "pair file");

  auto* nbr = app.add_subcommand("neighbor", "build <C ∩ x^⊥, x>");
  nbr->add_option("--code", code, "code file or built-in name")->required();
  nbr->add_option("--supp", supp, "support of x, 1-based, comma separated")->required();
  nbr->add_option("--name", name, "name of the result");
  nbr->add_option("-o,--out", out, "code file");

  std::size_t d_min = 0;
  std::uint64_t from = 1;
  std::optional<std::uint64_t> to;
  bool survey = false;
  std::vector<std::string> known;
  auto* nbrs = app.add_subcommand("neighbors", "enumerate self-dual neighbors");
  nbrs->add_option("--code", code, "code file or built-in name")->required();
  nbrs->add_option("--dmin", d_min, "keep neighbors of minimum weight at least this");
  nbrs->add_option("--from", from, "first hyperplane index (1-based)");
  nbrs->add_option("--to", to, "last hyperplane index");
  nbrs->add_flag("--survey", survey, "classify extremal neighbors and drop known codes");
  nbrs->add_option("--known", known, "codes already known (files or names)");
  nbrs->add_option("-o,--out", out, "descriptor file (JSON lines)");

  auto* sub = app.add_subcommand("subtract", "subtract two coordinates");
  sub->add_option("--code", code, "code file or built-in name")->required();
  sub->add_option("--coords", coords, "i,j (1-based)")->required();
  sub->add_option("--name", name, "name of the result");
  sub->add_option("-o,--out", out, "code file");

  std::vector<std::string> inputs;
  auto* cls = app.add_subcommand("classify", "partition codes into equivalence classes");
  cls->add_option("--in", inputs, "code files or directories")->required();
  cls->add_option("-o,--out", out, "report file");

  std::vector<std::string> tables;
  auto* repro = app.add_subcommand("reproduce", "re-derive published tables");
  repro->add_option("table", tables, "T1 T2 Tnei2 Td10 T4 T5 T6 EQ P3 P5 C7 or all");

  std::int64_t a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  auto* bal = app.add_subcommand("solve-shadow-balance", "solve a0 + a1 t = b0 + b1 t");
  bal->add_option("a0", a0)->required();
  bal->add_option("a1", a1)->required();
  bal->add_option("b0", b0)->required();
  bal->add_option("b1", b1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  try {
    if (*analyze) return cmd_analyze(code, threads, csv_dir, out);
    if (*search) {
      if (*bound_opt) sopt.weight_bound = bound;
      sopt.exact_weight = exact;
      sopt.last_b_entry_one = !unnormalized;
      sopt.threads = threads;
      return cmd_search(sopt, classify_flag, out, report);
    }
    if (*nbr) return cmd_neighbor(code, supp, name, out);
    if (*nbrs) return cmd_neighbors(code, d_min, from, to, survey, known, extended, threads, out);
    if (*sub) return cmd_subtract(code, coords, name, out);
    if (*cls) return cmd_classify(inputs, threads, out);
    if (*repro) return cmd_reproduce(tables, extended, threads);
    if (*bal) return cmd_balance(a0, a1, b0, b1);
  } catch (const Mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {  // ArgumentError, DimensionError
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
