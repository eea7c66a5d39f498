// Command-line front end: compute invariants of matroid files, compare two
// files, generate the bundled constructions, and run verification suites.
// Exit status: 0 = ok/equal/pass, 1 = unequal/fail, 2 = error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gcat/io.hpp"

namespace fs = std::filesystem;
using namespace gcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitError = 2;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

Matroid load_matroid(const std::string& path) {
  MatroidFile f = parse_matroid_file(read_file(path));
  return Matroid::from_cyclic_flats(f.family);
}

GInvariant ginv_of(const Matroid& m, int threads, bool force_brute, bool force_catenary) {
  if (force_brute) return g_invariant_bruteforce(m, kMaxElements);
  if (force_catenary) return g_from_catenary(catenary_data(m, threads));
  return g_invariant_auto(m, threads);
}

int cmd_compute(const std::string& what, const std::string& path, int threads, bool force_brute,
                bool force_catenary) {
  Timer timer;
  Matroid m = load_matroid(path);
  if (what == "tutte") {
    std::cout << "tutte: " << tutte_subset_sum(m).to_string() << "\n";
  } else if (what == "ginv") {
    std::cout << format_ginvariant(ginv_of(m, threads, force_brute, force_catenary));
  } else if (what == "catenary") {
    std::cout << format_catenary(catenary_data(m, threads));
  } else if (what == "config") {
    std::cout << format_configuration(configuration_of(m));
  } else if (what == "chains") {
    std::cout << format_chain_report(chain_report(m, threads));
  } else if (what == "iota") {
    std::cout << "iota: " << m.independent_hyperplane_count() << "\n";
  } else {
    throw std::invalid_argument("unknown computation '" + what + "'");
  }
  std::cerr << "time: " << timer.seconds() << "s\n";
  return kExitOk;
}

int cmd_compare(const std::string& mode, const std::string& path_a, const std::string& path_b,
                int threads, bool force_brute, bool force_catenary) {
  Timer timer;
  Matroid a = load_matroid(path_a);
  Matroid b = load_matroid(path_b);
  bool equal = false;
  if (mode == "ginv") {
    equal = ginv_of(a, threads, force_brute, force_catenary) ==
            ginv_of(b, threads, force_brute, force_catenary);
  } else if (mode == "catenary") {
    equal = catenary_data(a, threads) == catenary_data(b, threads);
  } else if (mode == "config") {
    equal = labeled_isomorphic(configuration_of(a), configuration_of(b));
  } else if (mode == "tutte") {
    equal = tutte_subset_sum(a) == tutte_subset_sum(b);
  } else {
    throw std::invalid_argument("unknown comparison mode '" + mode + "'");
  }
  std::cout << mode << ": " << (equal ? "equal" : "unequal") << "\n";
  std::cerr << "time: " << timer.seconds() << "s\n";
  return equal ? kExitOk : kExitUnequal;
}

void write_matroid(const fs::path& path, const Matroid& m, const std::string& name) {
  write_file_atomic(path, serialize_matroid_file(matroid_file_of(m, name)));
  std::cout << "wrote " << path.string() << "\n";
}

std::vector<int> parse_csv_ints(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(ioutil::to_int(cur));
  return out;
}

int cmd_verify_axioms(const std::vector<std::string>& paths) {
  int status = kExitOk;
  for (const std::string& path : paths) {
    MatroidFile f = parse_matroid_file(read_file(path));
    ZReport rep = validate_z_axioms(f.family);
    std::cout << path << ": " << rep.to_string() << "\n";
    if (!rep.ok) status = kExitUnequal;
  }
  return status;
}

std::vector<std::string> expand_matroid_paths(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const std::string& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.path().extension() == ".matroid") found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

int cmd_verify_lemma31(const std::vector<std::string>& paths) {
  int status = kExitOk;
  for (const std::string& path : expand_matroid_paths(paths)) {
    Matroid m = load_matroid(path);
    auto check = inclusion_exclusion_check(m);
    std::cout << path << ": " << (check.ok() ? "pass" : "fail") << " (union " << check.union_size
              << ", subset sum " << check.subset_signed_sum << ", chain sum "
              << check.chain_signed_sum << ", iota " << check.iota_direct << ")\n";
    if (!check.ok()) status = kExitUnequal;
  }
  return status;
}

int cmd_verify_chains(const std::string& path_a, const std::string& path_b, int threads) {
  // single-block partition: the whole chain sets on both sides, which makes
  // the blockwise comparison the full composition-multiset equality
  Matroid a = load_matroid(path_a);
  Matroid b = load_matroid(path_b);
  std::vector<ZChain> pa = zfree_chains(a), pb = zfree_chains(b);
  pa.push_back({});
  pb.push_back({});
  auto res = verify_chain_partition(a, b, {pa}, {pb}, threads);
  std::cout << (res.ok ? "pass" : "fail: " + res.message) << "\n";
  return res.ok ? kExitOk : kExitUnequal;
}

int cmd_verify_paving(const std::string& path) {
  PavingPairFile f = parse_paving_pair_file(read_file(path));
  HypothesisCheck check = verify_paving_hypotheses(f.spec);
  std::cout << (check.ok ? "pass" : "fail: " + check.witness) << "\n";
  return check.ok ? kExitOk : kExitUnequal;
}

int cmd_verify_duality(const std::vector<std::string>& paths, int threads) {
  int status = kExitOk;
  for (const std::string& path : expand_matroid_paths(paths)) {
    Matroid m = load_matroid(path);
    Matroid d = m.dual();
    bool g_ok = ginv_of(d, threads, false, false) == dual_transform(ginv_of(m, threads, false, false));
    bool z_ok = true;
    auto dz = d.cyclic_flats_stored();
    std::vector<RankedFlat> expect;
    for (const RankedFlat& z : m.cyclic_flats_stored())
      expect.push_back({m.ground() - z.set, (m.ground() - z.set).size() + z.rank - m.rank()});
    std::sort(expect.begin(), expect.end());
    z_ok = dz == expect;
    std::cout << path << ": " << (g_ok && z_ok ? "pass" : "fail") << "\n";
    if (!(g_ok && z_ok)) status = kExitUnequal;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid invariants workbench: cyclic flats, G-invariant, catenary data, configurations"};
  app.require_subcommand(1);
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--threads", threads, "worker threads for flag enumeration");

  // compute
  auto* compute = app.add_subcommand("compute", "compute an invariant of a matroid file");
  std::string what = "ginv", in_path;
  bool force_brute = false, force_catenary = false;
  compute->add_option("--what", what, "tutte|ginv|catenary|config|chains|iota");
  compute->add_flag("--force-bruteforce", force_brute, "force the permutation route for ginv");
  compute->add_flag("--force-catenary", force_catenary, "force the catenary route for ginv");
  compute->add_option("file", in_path, "matroid file")->required();

  // compare
  auto* compare = app.add_subcommand("compare", "compare two matroid files");
  std::string mode = "ginv", path_a, path_b;
  compare->add_option("--mode", mode, "ginv|catenary|config|tutte");
  compare->add_flag("--force-bruteforce", force_brute, "force the permutation route for ginv");
  compare->add_flag("--force-catenary", force_catenary, "force the catenary route for ginv");
  compare->add_option("fileA", path_a)->required();
  compare->add_option("fileB", path_b)->required();

  // generate
  auto* generate = app.add_subcommand("generate", "generate construction instances");
  generate->require_subcommand(1);
  std::string output = "out.matroid", output_prefix = "pair", input, spec_path, name;
  int par_t = 1, g_m = 2, g_n = 2, block = 2;
  std::string sizes_csv = "5,6", assign_csv = "1,1";

  auto* gen_parallel = generate->add_subcommand("parallel", "parallel extension of a matroid file");
  gen_parallel->add_option("--input", input)->required();
  gen_parallel->add_option("--t", par_t, "parallel elements per original element");
  gen_parallel->add_option("--output", output);

  auto* gen_dual = generate->add_subcommand("dual", "dual of a matroid file");
  gen_dual->add_option("--input", input)->required();
  gen_dual->add_option("--output", output);

  auto* gen_e1 = generate->add_subcommand("example1", "rank-4 line/plane family member");
  gen_e1->add_option("--m", g_m, "number of three-point lines");
  gen_e1->add_option("--sizes", sizes_csv, "plane sizes, comma separated");
  gen_e1->add_option("--assign", assign_csv, "line index per plane (1-based), comma separated");
  gen_e1->add_option("--output", output);

  auto* gen_e3 = generate->add_subcommand("example3", "rank-3 paving pair on 2+m+n points");
  gen_e3->add_option("--m", g_m);
  gen_e3->add_option("--n", g_n);
  gen_e3->add_option("--block", block, "block size per element");
  gen_e3->add_option("--output-prefix", output_prefix);

  auto* gen_e4 = generate->add_subcommand("example4", "rank-4 paving pair on 12 points");
  gen_e4->add_option("--block", block, "block size per element");
  gen_e4->add_option("--output-prefix", output_prefix);

  auto* gen_lat = generate->add_subcommand("lattice-extension", "realize a lattice-extension spec");
  gen_lat->add_option("--spec", spec_path)->required();
  gen_lat->add_option("--output-prefix", output_prefix);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string kind;
  std::vector<std::string> paths;
  verify->add_option("kind", kind, "axioms|lemma31|chains|paving-hypotheses|duality")->required();
  verify->add_option("paths", paths, "input files (or directories of .matroid files)")->required();

  try {
    app.parse(argc, argv);

    if (*compute) return cmd_compute(what, in_path, threads, force_brute, force_catenary);
    if (*compare) return cmd_compare(mode, path_a, path_b, threads, force_brute, force_catenary);

    if (*gen_parallel) {
      Matroid m = load_matroid(input);
      write_matroid(output, parallel_extension(m, par_t), "");
      return kExitOk;
    }
    if (*gen_dual) {
      write_matroid(output, load_matroid(input).dual(), "");
      return kExitOk;
    }
    if (*gen_e1) {
      Matroid m = example1_family(g_m, parse_csv_ints(assign_csv), parse_csv_ints(sizes_csv));
      write_matroid(output, m, "");
      return kExitOk;
    }
    if (*gen_e3 || *gen_e4) {
      PavingPairSpec spec = *gen_e3 ? example3_spec(g_m, g_n, block) : example4_spec(block);
      auto [m1, m2] = realize_paving_pair(spec);
      PavingPairFile pf{fs::path(output_prefix).filename().string(), spec};
      write_file_atomic(output_prefix + ".paving-pair", serialize_paving_pair_file(pf));
      std::cout << "wrote " << output_prefix << ".paving-pair\n";
      write_matroid(output_prefix + "-M1.matroid", m1, "");
      write_matroid(output_prefix + "-M2.matroid", m2, "");
      return kExitOk;
    }
    if (*gen_lat) {
      LatticeExtensionFile f = parse_lattice_extension_file(read_file(spec_path));
      auto [ms, mt] = realize_extension_pair(f.spec, f.labels);
      write_matroid(output_prefix + "-Ms.matroid", ms, "");
      write_matroid(output_prefix + "-Mt.matroid", mt, "");
      return kExitOk;
    }

    if (*verify) {
      if (kind == "axioms") return cmd_verify_axioms(paths);
      if (kind == "lemma31") return cmd_verify_lemma31(paths);
      if (kind == "chains") {
        if (paths.size() != 2) throw std::invalid_argument("verify chains needs two files");
        return cmd_verify_chains(paths[0], paths[1], threads);
      }
      if (kind == "paving-hypotheses") {
        if (paths.size() != 1) throw std::invalid_argument("verify paving-hypotheses needs one file");
        return cmd_verify_paving(paths[0]);
      }
      if (kind == "duality") return cmd_verify_duality(paths, threads);
      throw std::invalid_argument("unknown verification kind '" + kind + "'");
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const z_validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
