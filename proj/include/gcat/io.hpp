#pragma once

// Text formats for matroids, paving specs, paving pairs and lattice-extension
// specs, plus canonical printing of the computed invariants.  Documents are
// line-oriented key/value text with a leading "format: 1" line; serialization
// is canonical (sorted sets, fixed key order, single spaces) so that files
// round-trip byte-identically once canonicalized.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcat/configuration.hpp"
#include "gcat/constructions.hpp"
#include "gcat/ginvariant.hpp"
#include "gcat/matroid.hpp"
#include "gcat/tutte.hpp"

namespace gcat {

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace ioutil {

struct Line {
  std::string key;
  std::string value;
};

// key: value lines; '#' starts a comment, blank lines are skipped.
inline std::vector<Line> parse_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    raw = strip(raw);
    if (raw.empty()) continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw parse_error("expected 'key: value': " + raw);
    lines.push_back({strip(raw.substr(0, colon)), strip(raw.substr(colon + 1))});
  }
  return lines;
}

inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw parse_error("not an integer: " + s);
    return v;
  } catch (const std::exception&) {
    throw parse_error("not an integer: " + s);
  }
}

inline ElemSet parse_set(const std::string& s, int n) {
  ElemSet out;
  for (const std::string& t : tokens(s)) {
    int e = to_int(t);
    if (e < 0 || e >= n) throw parse_error("element " + t + " out of range 0.." + std::to_string(n - 1));
    out = out.with(e);
  }
  return out;
}

inline std::string set_text(ElemSet s) {
  std::string out;
  for (int e : s) {
    if (!out.empty()) out += " ";
    out += std::to_string(e);
  }
  return out;
}

// "value : rest" pairs inside a line value
inline std::pair<std::string, std::string> split_colon(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw parse_error("expected ':' in '" + s + "'");
  auto strip = [](std::string v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  return {strip(s.substr(0, colon)), strip(s.substr(colon + 1))};
}

inline void expect_header(const std::vector<Line>& lines, const std::string& type) {
  if (lines.empty() || lines[0].key != "format" || lines[0].value != "1")
    throw parse_error("missing 'format: 1' header");
  if (lines.size() < 2 || lines[1].key != "type" || lines[1].value != type)
    throw parse_error("expected 'type: " + type + "'");
}

}  // namespace ioutil

// ---------------------------------------------------------------------------
// Matroid files.

struct MatroidFile {
  std::string name;
  RankedFamily family;
};

inline MatroidFile parse_matroid_file(const std::string& text) {
  auto lines = ioutil::parse_lines(text);
  ioutil::expect_header(lines, "matroid");
  MatroidFile f;
  f.family.n = -1;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [key, value] = lines[i];
    if (key == "name") {
      f.name = value;
    } else if (key == "elements") {
      f.family.n = ioutil::to_int(value);
      if (f.family.n < 0 || f.family.n > kMaxElements) throw parse_error("bad element count");
    } else if (key == "cyclic-flat") {
      if (f.family.n < 0) throw parse_error("'elements' must precede cyclic flats");
      auto [rank_text, set_text] = ioutil::split_colon(value);
      f.family.entries.push_back({ioutil::parse_set(set_text, f.family.n), ioutil::to_int(rank_text)});
    } else {
      throw parse_error("unknown key '" + key + "' in matroid file");
    }
  }
  if (f.family.n < 0) throw parse_error("missing 'elements'");
  return f;
}

inline std::string serialize_matroid_file(const MatroidFile& f) {
  std::vector<RankedFlat> entries = f.family.entries;
  std::sort(entries.begin(), entries.end());
  std::string out = "format: 1\ntype: matroid\n";
  if (!f.name.empty()) out += "name: " + f.name + "\n";
  out += "elements: " + std::to_string(f.family.n) + "\n";
  for (const RankedFlat& z : entries) {
    out += "cyclic-flat: " + std::to_string(z.rank) + " :";
    std::string s = ioutil::set_text(z.set);
    if (!s.empty()) out += " " + s;
    out += "\n";
  }
  return out;
}

inline MatroidFile matroid_file_of(const Matroid& m, const std::string& name) {
  MatroidFile f;
  f.name = name;
  f.family.n = m.ground_size();
  f.family.entries = m.cyclic_flats_stored();
  return f;
}

// ---------------------------------------------------------------------------
// Paving files.

struct PavingFile {
  std::string name;
  PavingSpec spec;
};

inline PavingFile parse_paving_file(const std::string& text) {
  auto lines = ioutil::parse_lines(text);
  ioutil::expect_header(lines, "paving");
  PavingFile f;
  f.spec.n = -1;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [key, value] = lines[i];
    if (key == "name") f.name = value;
    else if (key == "elements") f.spec.n = ioutil::to_int(value);
    else if (key == "rank") f.spec.r = ioutil::to_int(value);
    else if (key == "dependent-hyperplane") {
      if (f.spec.n < 0) throw parse_error("'elements' must precede hyperplanes");
      f.spec.dependent_hyperplanes.push_back(ioutil::parse_set(value, f.spec.n));
    } else throw parse_error("unknown key '" + key + "' in paving file");
  }
  if (f.spec.n < 0) throw parse_error("missing 'elements'");
  return f;
}

inline std::string serialize_paving_file(const PavingFile& f) {
  std::string out = "format: 1\ntype: paving\n";
  if (!f.name.empty()) out += "name: " + f.name + "\n";
  out += "elements: " + std::to_string(f.spec.n) + "\n";
  out += "rank: " + std::to_string(f.spec.r) + "\n";
  std::vector<ElemSet> hs = f.spec.dependent_hyperplanes;
  std::sort(hs.begin(), hs.end());
  for (ElemSet h : hs) out += "dependent-hyperplane: " + ioutil::set_text(h) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Paving-pair files: two paving matroids plus partitions, bijections, block
// sizes and rank labels.

struct PavingPairFile {
  std::string name;
  PavingPairSpec spec;
};

namespace ioutil {

// cycle notation "(4 6) (5 7)" or an explicit map "4=6 6=4 ..."
inline std::vector<int> parse_permutation(const std::string& s, int n) {
  std::vector<int> alpha(n);
  for (int i = 0; i < n; ++i) alpha[i] = i;
  if (s.find('(') != std::string::npos) {
    std::string cur;
    std::vector<std::vector<int>> cycles;
    std::optional<std::vector<int>> open;
    for (char c : s) {
      if (c == '(') {
        if (open) throw parse_error("nested '(' in permutation");
        open = std::vector<int>{};
      } else if (c == ')') {
        if (!open) throw parse_error("unmatched ')' in permutation");
        if (!cur.empty()) open->push_back(to_int(cur));
        cur.clear();
        cycles.push_back(*open);
        open.reset();
      } else if (c == ' ' || c == ',') {
        if (!cur.empty() && open) open->push_back(to_int(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (open) throw parse_error("unclosed '(' in permutation");
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || from >= n || to < 0 || to >= n) throw parse_error("permutation entry out of range");
        alpha[from] = to;
      }
    }
  } else {
    for (const std::string& t : tokens(s)) {
      auto eq = t.find('=');
      if (eq == std::string::npos) throw parse_error("expected a=b or cycles in permutation");
      int from = to_int(t.substr(0, eq)), to = to_int(t.substr(eq + 1));
      if (from < 0 || from >= n || to < 0 || to >= n) throw parse_error("permutation entry out of range");
      alpha[from] = to;
    }
  }
  std::vector<bool> seen(n, false);
  for (int v : alpha) {
    if (seen[v]) throw parse_error("not a permutation");
    seen[v] = true;
  }
  return alpha;
}

inline std::string permutation_text(const std::vector<int>& alpha) {
  // canonical cycle notation, fixed points omitted
  std::string out;
  std::vector<bool> seen(alpha.size(), false);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (seen[i] || alpha[i] == static_cast<int>(i)) continue;
    std::string cyc = "(" + std::to_string(i);
    seen[i] = true;
    for (int j = alpha[i]; j != static_cast<int>(i); j = alpha[j]) {
      cyc += " " + std::to_string(j);
      seen[j] = true;
    }
    cyc += ")";
    if (!out.empty()) out += " ";
    out += cyc;
  }
  return out.empty() ? "()" : out;
}

}  // namespace ioutil

inline PavingPairFile parse_paving_pair_file(const std::string& text) {
  auto lines = ioutil::parse_lines(text);
  ioutil::expect_header(lines, "paving-pair");
  PavingPairFile f;
  int n = -1, r = -1;
  std::map<int, std::vector<ElemSet>> part_a, part_b;
  std::map<int, std::vector<int>> alphas;
  int default_block = 1;
  std::map<int, int> block_overrides;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [key, value] = lines[i];
    if (key == "name") f.name = value;
    else if (key == "elements") n = ioutil::to_int(value);
    else if (key == "rank") r = ioutil::to_int(value);
    else if (key == "n1-hyperplane" || key == "n2-hyperplane") {
      if (n < 0) throw parse_error("'elements' must precede hyperplanes");
      auto& spec = key[1] == '1' ? f.spec.n1 : f.spec.n2;
      spec.dependent_hyperplanes.push_back(ioutil::parse_set(value, n));
    } else if (key == "partition-a" || key == "partition-b") {
      auto [index_text, rest] = ioutil::split_colon(value);
      int idx = ioutil::to_int(index_text);
      std::vector<ElemSet> sets;
      std::string piece;
      std::istringstream in(rest);
      while (std::getline(in, piece, '|')) sets.push_back(ioutil::parse_set(piece, n));
      (key == "partition-a" ? part_a : part_b)[idx] = sets;
    } else if (key == "alpha") {
      auto [index_text, rest] = ioutil::split_colon(value);
      alphas[ioutil::to_int(index_text)] = ioutil::parse_permutation(rest, n);
    } else if (key == "block-size") {
      auto [which, size_text] = ioutil::split_colon(value);
      if (which == "default") default_block = ioutil::to_int(size_text);
      else block_overrides[ioutil::to_int(which)] = ioutil::to_int(size_text);
    } else if (key == "rank-label") {
      auto [rank_text, set_text] = ioutil::split_colon(value);
      f.spec.rank_labels[ioutil::parse_set(set_text, n)] = ioutil::to_int(rank_text);
    } else throw parse_error("unknown key '" + key + "' in paving-pair file");
  }
  if (n < 0 || r < 0) throw parse_error("missing 'elements' or 'rank'");
  f.spec.n1.n = f.spec.n2.n = n;
  f.spec.n1.r = f.spec.n2.r = r;
  auto collect = [](std::map<int, std::vector<ElemSet>>& m) {
    std::vector<std::vector<ElemSet>> out;
    int expect = 1;
    for (auto& [idx, sets] : m) {
      if (idx != expect++) throw parse_error("partition blocks must be numbered 1..p");
      out.push_back(std::move(sets));
    }
    return out;
  };
  f.spec.blocks_a = collect(part_a);
  f.spec.blocks_b = collect(part_b);
  int expect = 1;
  for (auto& [idx, alpha] : alphas) {
    if (idx != expect++) throw parse_error("alpha maps must be numbered 1..p");
    f.spec.alphas.push_back(std::move(alpha));
  }
  f.spec.block_sizes.assign(n, default_block);
  for (auto [e, s] : block_overrides) {
    if (e < 0 || e >= n) throw parse_error("block-size element out of range");
    f.spec.block_sizes[e] = s;
  }
  return f;
}

inline std::string serialize_paving_pair_file(const PavingPairFile& f) {
  const PavingPairSpec& s = f.spec;
  std::string out = "format: 1\ntype: paving-pair\n";
  if (!f.name.empty()) out += "name: " + f.name + "\n";
  out += "elements: " + std::to_string(s.n1.n) + "\n";
  out += "rank: " + std::to_string(s.n1.r) + "\n";
  auto hyps = [&](const PavingSpec& ps, const std::string& key) {
    std::vector<ElemSet> hs = ps.dependent_hyperplanes;
    std::sort(hs.begin(), hs.end());
    std::string t;
    for (ElemSet h : hs) t += key + ": " + ioutil::set_text(h) + "\n";
    return t;
  };
  out += hyps(s.n1, "n1-hyperplane");
  out += hyps(s.n2, "n2-hyperplane");
  auto blocks = [&](const std::vector<std::vector<ElemSet>>& bs, const std::string& key) {
    std::string t;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      std::vector<ElemSet> sorted = bs[j];
      std::sort(sorted.begin(), sorted.end());
      t += key + ": " + std::to_string(j + 1) + " :";
      for (std::size_t i = 0; i < sorted.size(); ++i)
        t += (i ? " | " : " ") + ioutil::set_text(sorted[i]);
      t += "\n";
    }
    return t;
  };
  out += blocks(s.blocks_a, "partition-a");
  out += blocks(s.blocks_b, "partition-b");
  for (std::size_t j = 0; j < s.alphas.size(); ++j)
    out += "alpha: " + std::to_string(j + 1) + " : " + ioutil::permutation_text(s.alphas[j]) + "\n";
  // block sizes: emit the most common value as default, overrides after
  std::map<int, int> freq;
  for (int b : s.block_sizes) ++freq[b];
  int def = s.block_sizes.empty() ? 1 : s.block_sizes[0];
  for (auto [v, c] : freq)
    if (c > freq[def]) def = v;
  out += "block-size: default : " + std::to_string(def) + "\n";
  for (std::size_t e = 0; e < s.block_sizes.size(); ++e)
    if (s.block_sizes[e] != def)
      out += "block-size: " + std::to_string(e) + " : " + std::to_string(s.block_sizes[e]) + "\n";
  for (auto& [set, rank] : s.rank_labels)
    out += "rank-label: " + std::to_string(rank) + " : " + ioutil::set_text(set) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Lattice-extension files.  Elements are named tokens; inserts are given by
// their interior elements and covers.

struct LatticeExtensionFile {
  std::string name;
  LatticeExtensionSpec spec;
  ExtensionLabels labels;
  std::vector<std::string> element_names;  // base elements then insert interiors
};

inline LatticeExtensionFile parse_lattice_extension_file(const std::string& text) {
  auto lines = ioutil::parse_lines(text);
  ioutil::expect_header(lines, "lattice-extension");
  LatticeExtensionFile f;

  std::vector<std::string> base_names;
  std::vector<std::pair<std::string, std::string>> base_covers;
  std::vector<std::string> atom_names;
  std::string b_name;
  std::map<int, std::vector<std::pair<std::string, std::string>>> tau_lines;
  std::vector<std::pair<std::string, std::vector<std::string>>> inserts;  // name, interior
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> insert_covers;
  std::vector<int> s_vals, t_vals;
  std::map<std::string, int> sizes, ranks;

  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [key, value] = lines[i];
    if (key == "name") f.name = value;
    else if (key == "base-elements") base_names = ioutil::tokens(value);
    else if (key == "base-cover") {
      auto t = ioutil::tokens(value);
      if (t.size() != 2) throw parse_error("base-cover needs two elements");
      base_covers.push_back({t[0], t[1]});
    } else if (key == "atoms") atom_names = ioutil::tokens(value);
    else if (key == "b") b_name = value;
    else if (key == "tau") {
      auto [index_text, rest] = ioutil::split_colon(value);
      auto& pairs = tau_lines[ioutil::to_int(index_text)];
      for (const std::string& t : ioutil::tokens(rest)) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw parse_error("tau entries are y=z");
        pairs.push_back({t.substr(0, eq), t.substr(eq + 1)});
      }
    } else if (key == "insert") {
      auto [iname, rest] = ioutil::split_colon(value);
      inserts.push_back({iname, ioutil::tokens(rest)});
    } else if (key == "insert-cover") {
      auto [iname, rest] = ioutil::split_colon(value);
      auto t = ioutil::tokens(rest);
      if (t.size() != 2) throw parse_error("insert-cover needs two elements");
      insert_covers[iname].push_back({t[0], t[1]});
    } else if (key == "s") {
      for (const std::string& t : ioutil::tokens(value)) s_vals.push_back(ioutil::to_int(t));
    } else if (key == "t") {
      for (const std::string& t : ioutil::tokens(value)) t_vals.push_back(ioutil::to_int(t));
    } else if (key == "size") {
      auto t = ioutil::tokens(value);
      if (t.size() != 2) throw parse_error("size needs 'element value'");
      sizes[t[0]] = ioutil::to_int(t[1]);
    } else if (key == "rank") {
      auto t = ioutil::tokens(value);
      if (t.size() != 2) throw parse_error("rank needs 'element value'");
      ranks[t[0]] = ioutil::to_int(t[1]);
    } else throw parse_error("unknown key '" + key + "' in lattice-extension file");
  }

  std::map<std::string, int> base_index;
  for (std::size_t i = 0; i < base_names.size(); ++i) {
    if (base_index.count(base_names[i])) throw parse_error("duplicate base element " + base_names[i]);
    base_index[base_names[i]] = static_cast<int>(i);
  }
  auto base_of = [&](const std::string& name) {
    auto it = base_index.find(name);
    if (it == base_index.end()) throw parse_error("unknown base element " + name);
    return it->second;
  };
  std::vector<std::pair<int, int>> covers;
  for (auto& [a, b] : base_covers) covers.push_back({base_of(a), base_of(b)});
  f.spec.base = FiniteLattice::from_covers(static_cast<int>(base_names.size()), covers);
  for (const std::string& a : atom_names) f.spec.atoms.push_back(base_of(a));
  f.spec.b = base_of(b_name.empty() ? base_names.at(f.spec.base.bottom()) : b_name);
  for (int i = 1; i < static_cast<int>(atom_names.size()); ++i) {
    auto it = tau_lines.find(i);
    if (it == tau_lines.end()) throw parse_error("missing tau for target " + std::to_string(i));
    std::map<int, int> tau;
    for (auto& [y, z] : it->second) tau[base_of(y)] = base_of(z);
    f.spec.taus.push_back(std::move(tau));
  }

  f.element_names = base_names;
  for (auto& [iname, interior] : inserts) {
    // inner lattice: bottom, interior in listing order, top
    int isz = static_cast<int>(interior.size()) + 2;
    std::map<std::string, int> idx;
    for (std::size_t j = 0; j < interior.size(); ++j) idx[interior[j]] = static_cast<int>(j) + 1;
    std::vector<std::vector<bool>> leq(isz, std::vector<bool>(isz, false));
    for (int v = 0; v < isz; ++v) {
      leq[v][v] = true;
      leq[0][v] = true;
      leq[v][isz - 1] = true;
    }
    for (auto& [a, b] : insert_covers[iname]) {
      if (!idx.count(a) || !idx.count(b)) throw parse_error("insert-cover names unknown interior element");
      leq[idx[a]][idx[b]] = true;
    }
    // close the interior order
    for (int k = 0; k < isz; ++k)
      for (int a = 0; a < isz; ++a)
        if (leq[a][k])
          for (int c = 0; c < isz; ++c)
            if (leq[k][c]) leq[a][c] = true;
    f.spec.inserts.push_back(FiniteLattice::from_leq(std::move(leq)));
    for (const std::string& e : interior) f.element_names.push_back(e);
  }
  for (int v : s_vals) f.spec.assign_s.push_back(v - 1);
  for (int v : t_vals) f.spec.assign_t.push_back(v - 1);

  for (const std::string& e : f.element_names) {
    auto its = sizes.find(e);
    auto itr = ranks.find(e);
    if (its == sizes.end() || itr == ranks.end())
      throw parse_error("missing size or rank label for element " + e);
    f.labels.sizes.push_back(its->second);
    f.labels.ranks.push_back(itr->second);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Invariant printing, canonical order throughout.

inline std::string format_composition(const Composition& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
  return out + ")";
}

inline std::string format_ginvariant(const GInvariant& g) {
  std::string out;
  for (auto& [seq, c] : g.counts)
    out += c.str() + " [" + RankSequence{g.n, seq}.to_string() + "]\n";
  out += "total: " + g.total().str() + "\n";
  return out;
}

inline std::string format_catenary(const CatenaryData& cd) {
  std::string out;
  for (auto& [a, c] : cd.nu)
    out += "nu " + format_composition(a) + " = " + std::to_string(c) + "\n";
  out += "flags: " + std::to_string(cd.flag_count()) + "\n";
  return out;
}

inline std::string format_configuration(const Configuration& c) {
  std::string out = "elements: " + std::to_string(c.lattice.size()) + "\n";
  for (int v = 0; v < c.lattice.size(); ++v)
    out += "label: " + std::to_string(v) + " : size " + std::to_string(c.size_label[v]) +
           " rank " + std::to_string(c.rank_label[v]) + "\n";
  for (auto [a, b] : c.lattice.cover_pairs())
    out += "cover: " + std::to_string(a) + " " + std::to_string(b) + "\n";
  return out;
}

inline std::string format_chain(const ZChain& chain) {
  if (chain.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i)
    out += (i ? " < " : "") + chain[i].to_string();
  return out;
}

inline std::string format_chain_report(const ChainReport& rep) {
  std::string out;
  std::vector<std::pair<ZChain, const CompositionMultiset*>> rows;
  for (auto& [chain, ms] : rep.per_chain) rows.push_back({chain, &ms});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [chain, ms] : rows) {
    out += "chain " + format_chain(chain) + " :";
    if (ms->empty()) out += " (no flags)";
    for (auto& [a, c] : *ms) out += " " + format_composition(a) + " x" + std::to_string(c);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files on disk; writes go to a temp file first, then rename.

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gcat
