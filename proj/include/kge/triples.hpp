#pragma once

#include "kge/common.hpp"
#include "kge/log.hpp"
#include "kge/vocab.hpp"

#include <cstdio>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace kge {

struct Triple {
  int head;
  int relation;
  int tail;

  friend bool operator==(const Triple&, const Triple&) = default;
};

enum class Split { train, valid, test };

inline const char* split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::valid: return "valid";
    default: return "test";
  }
}

/// Integer-encoded triples of one dataset split. `augmented` records whether
/// reciprocal triples have been added.
struct TripleStore {
  std::vector<Triple> triples;
  Split split = Split::train;
  bool augmented = false;

  size_t size() const { return triples.size(); }
};

namespace detail {

inline uint64_t pair_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) | static_cast<uint32_t>(b);
}

inline uint64_t triple_key(const Triple& t) {
  // 21 bits per component; enough for ~2M entities/relations.
  return (static_cast<uint64_t>(t.head) << 42) | (static_cast<uint64_t>(t.relation) << 21) |
         static_cast<uint64_t>(t.tail);
}

}  // namespace detail

/// Reads a tab-separated triple file (head TAB relation TAB tail, one per line,
/// UTF-8). The train split extends the vocabulary; valid/test reject unseen
/// names. Duplicate triples are dropped with a warning.
inline TripleStore load_triples(const std::string& path, Vocab& vocab, Split split) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open triple file: " + path);

  const bool extend = (split == Split::train);
  TripleStore store;
  store.split = split;

  std::unordered_set<uint64_t> seen;
  size_t duplicates = 0;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    size_t tab1 = line.find('\t');
    size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos ||
        line.find('\t', tab2 + 1) != std::string::npos) {
      throw data_error(path + ":" + std::to_string(line_no) +
                       ": malformed line, expected head<TAB>relation<TAB>tail");
    }
    std::string head = line.substr(0, tab1);
    std::string rel = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string tail = line.substr(tab2 + 1);
    if (head.empty() || rel.empty() || tail.empty()) {
      throw data_error(path + ":" + std::to_string(line_no) + ": malformed line, empty field");
    }

    Triple t{};
    if (extend) {
      t.head = vocab.add_entity(head);
      t.relation = vocab.add_relation(rel);
      t.tail = vocab.add_entity(tail);
    } else {
      t.head = vocab.find_entity(head);
      t.relation = vocab.find_relation(rel);
      t.tail = vocab.find_entity(tail);
      if (t.head < 0)
        throw data_error(path + ":" + std::to_string(line_no) + ": unknown entity '" + head + "'");
      if (t.relation < 0)
        throw data_error(path + ":" + std::to_string(line_no) + ": unknown relation '" + rel + "'");
      if (t.tail < 0)
        throw data_error(path + ":" + std::to_string(line_no) + ": unknown entity '" + tail + "'");
    }
    if (!seen.insert(detail::triple_key(t)).second) {
      ++duplicates;
      continue;
    }
    store.triples.push_back(t);
  }
  if (duplicates > 0) {
    log::warn(path + ": dropped " + std::to_string(duplicates) + " duplicate triples");
  }
  return store;
}

/// Adds the reciprocal triple (t, r + n_relations_original, h) for every (h, r, t)
/// and marks the vocabulary as augmented (if it is not already).
inline TripleStore add_reciprocals(const TripleStore& store, Vocab& vocab) {
  int n_orig = vocab.n_relations_original();
  if (store.augmented) throw state_error("triple store is already reciprocal-augmented");
  for (const Triple& t : store.triples) {
    if (t.relation >= n_orig)
      throw state_error("reciprocal relation index " + std::to_string(t.relation) +
                        " present before augmentation");
  }
  if (!vocab.augmented()) vocab.apply_reciprocal_augmentation();

  TripleStore out;
  out.split = store.split;
  out.augmented = true;
  out.triples.reserve(2 * store.triples.size());
  out.triples = store.triples;
  for (const Triple& t : store.triples) {
    out.triples.push_back(Triple{t.tail, t.relation + n_orig, t.head});
  }
  return out;
}

/// Writes a two-column TSV (index, name).
inline void dump_vocab_tsv(const std::vector<std::string>& names, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write vocab dump: " + path);
  for (size_t i = 0; i < names.size(); ++i) {
    out << i << '\t' << names[i] << '\n';
  }
}

}  // namespace kge
